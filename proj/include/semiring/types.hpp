#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiring {

/// Elements of a finite carrier are indices 0..n-1.
using elem = std::uint32_t;

inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Malformed input: bad table shape, out-of-range index, unknown name, unmet precondition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction or enumeration would exceed a configured size cap.
class size_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace semiring
