#pragma once

#include <stdexcept>
#include <string>

namespace transvec {

// Bad user input: malformed files, letters out of range, caps exceeded.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structural property that is supposed to hold was falsified by an
// instance. Thrown by constructive witnesses; verification suites report
// violations as data instead.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

}  // namespace transvec
