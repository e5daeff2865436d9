#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace pptri {

using BigInt = boost::multiprecision::cpp_int;

/// Least nonnegative residue of an arbitrary-precision integer mod a small modulus.
inline std::uint32_t residue_mod(const BigInt& value, std::uint64_t modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::uint32_t>(r);
}

}  // namespace pptri
