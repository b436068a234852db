#pragma once

// Exact nonnegative integers and rationals, backed by GMP.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace contin {

using BigNat = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigNat& v) { return v.get_str(10); }

inline BigNat big_pow(const BigNat& base, unsigned long exponent) {
    BigNat out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline BigNat factorial(unsigned long n) {
    BigNat out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigNat from_u128(unsigned __int128 v) {
    BigNat hi = static_cast<std::uint64_t>(v >> 64);
    BigNat lo = static_cast<std::uint64_t>(v);
    return (hi << 64) + lo;
}

}  // namespace contin
