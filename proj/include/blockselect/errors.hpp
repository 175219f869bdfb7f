#pragma once

#include <stdexcept>
#include <string>

namespace blockselect {

// Bad user input: malformed files, out-of-range ids, invalid options.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A library invariant failed (e.g. a state no longer matches its graph).
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace blockselect
