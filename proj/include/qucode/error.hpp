#ifndef QUCODE_ERROR_HPP
#define QUCODE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qucode {

/// Malformed group spec, subgroup selection or serialized code.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (group order, subgroup enumeration, search) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Signals a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Size limits shared by every exhaustive algorithm in the library.
struct Limits {
  std::size_t max_order = 2048;        // largest group that may be built
  std::size_t max_enumeration = 512;   // largest group whose subgroups may be listed
  std::size_t max_search = 128;        // largest group for representability search
};

}  // namespace qucode

#endif  // QUCODE_ERROR_HPP
