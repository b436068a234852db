#pragma once

#include <string>

#include <mpfr.h>

#include "contin/bignat.hpp"

namespace contin {

/// Starting and maximum significand bits for adaptive certified comparisons.
struct PrecisionPolicy {
    unsigned initial_bits = 128;
    unsigned max_bits = 4096;
};

/// Where an enclosure lies relative to a point.
enum class Certainty { below, above, undecided };

/// Closed interval [lo, hi] with MPFR endpoints; every operation rounds the
/// lower endpoint down and the upper endpoint up, so the true value of the
/// expression is always enclosed.
class CertifiedReal {
public:
    explicit CertifiedReal(unsigned precision_bits);
    CertifiedReal(const CertifiedReal& other);
    CertifiedReal(CertifiedReal&& other) noexcept;
    CertifiedReal& operator=(const CertifiedReal& other);
    CertifiedReal& operator=(CertifiedReal&& other) noexcept;
    ~CertifiedReal();

    static CertifiedReal exact(const BigNat& v, unsigned precision_bits);
    static CertifiedReal exact(const Rational& q, unsigned precision_bits);
    static CertifiedReal pi(unsigned precision_bits);
    /// e^k for an integer k.
    static CertifiedReal exp_of(long k, unsigned precision_bits);

    unsigned precision() const noexcept { return static_cast<unsigned>(mpfr_get_prec(lo_)); }
    mpfr_srcptr lower() const noexcept { return lo_; }
    mpfr_srcptr upper() const noexcept { return hi_; }

    friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
    /// Throws Error when the divisor encloses zero.
    friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);

    CertifiedReal sqrt() const;
    CertifiedReal exp() const;
    CertifiedReal pow(unsigned long k) const;

    Certainty compare(const Rational& q) const;
    Certainty compare(const CertifiedReal& other) const;
    bool contains(const Rational& q) const { return compare(q) == Certainty::undecided; }

    double approx() const;
    /// Decimal midpoint (round-to-nearest) and a radius rounded up so that the
    /// printed interval still encloses the value.
    std::string midpoint_decimal() const;
    std::string radius_decimal() const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace contin
