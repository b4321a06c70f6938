#pragma once

#include <stdexcept>
#include <string>

namespace homolink {

// Malformed or inconsistent input: bad files, unknown names, empty graphs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation whose result is undefined for the given data
// (zero denominators, degenerate null models, no viable policy).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homolink
