#pragma once

#include <stdexcept>
#include <string>

namespace susy8v {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ConditioningError : Error { using Error::Error; };
struct NullDimError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct AnchorZeroError : Error { using Error::Error; };
struct InternalConsistencyError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace susy8v
