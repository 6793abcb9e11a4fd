#pragma once

#include <stdexcept>
#include <string>

namespace commq {

// Malformed or inconsistent input: bad file syntax, invariant violations,
// partition/graph mismatches. CLI maps this to exit code 3.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation was refused because it would blow up (e.g. exhaustive
// search beyond the size guard). CLI maps this to exit code 4.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace commq
