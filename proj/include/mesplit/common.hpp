#pragma once

#include <stdexcept>
#include <string>

namespace mesplit {

// Default tolerances. Public checks accept 1e-9, construction-time
// validation uses 1e-12, PSD/trace slack 1e-10.
inline constexpr double kPublicTol = 1e-9;
inline constexpr double kValidateTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquare : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ZeroMass : Error { using Error::Error; };
struct IncompleteLabeling : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

}  // namespace mesplit
