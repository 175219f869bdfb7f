#include "blockselect/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return blockselect::cli::run(argc, argv, std::cout, std::cerr); }
