#pragma once

namespace gsslab {

inline constexpr int kMinDegree = 2;
inline constexpr int kHardMaxDegree = 16;
inline constexpr int kDefaultVerifyMaxDegree = 12;
// Largest degree the primitivity test handles (2^n - 1 factored by trial division).
inline constexpr int kMaxPrimitivityDegree = 32;

// Ceiling for enumeration, sequence generation and verification. Reads
// GSSLAB_MAX_DEGREE on every call; throws Errc::out_of_range if it is set to
// anything other than an integer in [kMinDegree, kHardMaxDegree].
int max_supported_degree();

}  // namespace gsslab
