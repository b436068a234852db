#pragma once

#include <cstdint>

#include "contin/bignat.hpp"
#include "contin/certified.hpp"

namespace contin {

/// 2^{2s} s! ((s+1)!)^m, the upper bound on the number of distinct values of an
/// equipartitioned class over an s-letter alphabet.
BigNat p_upper_bound(unsigned s, std::uint64_t m);

/// floor(((s-l+t) m)! / (2 (m!)^{s-l+t})), a lower bound on the class size.
BigNat n_lower_bound(unsigned t, unsigned l, unsigned s, std::uint64_t m);

/// Least m >= 1 with 2^{2s} s! 99^m <= 100^m.
std::uint64_t m0(unsigned s);

/// p_upper_bound(s, m) <= ((100/99) (s+1)!)^m, decided exactly.
bool geometric_bound_holds(unsigned s, std::uint64_t m);

/// f(t, l, s) = (1 - (l-t+1)/(s+1))^{s+1} = ((s-l+t)/(s+1))^{s+1}, exactly.
Rational f_exact(unsigned t, unsigned l, unsigned s);
CertifiedReal f_value(unsigned t, unsigned l, unsigned s, unsigned precision_bits = 128);

/// Least s >= l-t+1 with f(t, l, s) >= e^{-(l-t)-1} / 2.
unsigned s0(unsigned t, unsigned l, const PrecisionPolicy& policy = {});

/// H(t, l, s) = (363/400) e^{s+1} / (sqrt(2 pi (s+1)) (s-l+t)^{l-t+1}) * e^{-(l-t)-1} / 2.
CertifiedReal H_value(unsigned t, unsigned l, unsigned s, unsigned precision_bits = 128);

/// Certified H(t, l, s) > 1, raising precision until decided.
bool H_exceeds_one(unsigned t, unsigned l, unsigned s, const PrecisionPolicy& policy = {});

/// Least s' >= max(s0(t, l), l+1) with H(t, l, s') > 1.
unsigned smallest_admissible_s(unsigned t, unsigned l, const PrecisionPolicy& policy = {});

struct StirlingEnclosure {
    CertifiedReal lower;  // e^{-n} n^n sqrt(2 pi n)
    CertifiedReal upper;  // (12/11) e^{-n} n^n sqrt(2 pi n)
};

StirlingEnclosure stirling_enclosure(std::uint64_t n, unsigned precision_bits = 128);

/// lower < n! < upper, certified; raises precision until decided.
bool stirling_brackets_factorial(std::uint64_t n, const PrecisionPolicy& policy = {});

struct BoundsReport {
    unsigned t = 0;
    unsigned l = 0;
    unsigned s = 0;
    std::uint64_t m = 0;
    BigNat p_upper;
    BigNat n_lower;
    std::uint64_t m0 = 0;
    bool geometric_bound = false;  // p_upper <= ((100/99)(s+1)!)^m
    Rational f_exact;
    CertifiedReal f_value{128};
    unsigned s0 = 0;
    CertifiedReal H_value{128};
    CertifiedReal H_pow_m{128};  // lower-bound side of N/P > H^m, for inspection only
    bool admissible = false;     // s >= s0 and H > 1
};

/// Requires 1 <= t <= l < s and m >= 1.
BoundsReport bounds_report(unsigned t, unsigned l, unsigned s, std::uint64_t m, const PrecisionPolicy& policy = {});

}  // namespace contin
