#include "contin/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "contin/errors.hpp"

namespace contin {

namespace {

void require_shape(unsigned t, unsigned l, unsigned s, const char* op) {
    if (t < 1 || t > l || l >= s) {
        throw ValidationError(std::string(op) + ": requires 1 <= t <= l < s (t=" + std::to_string(t) +
                              ", l=" + std::to_string(l) + ", s=" + std::to_string(s) + ")");
    }
}

void require_tl(unsigned t, unsigned l, const char* op) {
    if (t < 1 || t > l) {
        throw ValidationError(std::string(op) + ": requires 1 <= t <= l (t=" + std::to_string(t) +
                              ", l=" + std::to_string(l) + ")");
    }
}

BigNat prefactor(unsigned s) { return big_pow(BigNat(2), 2ul * s) * factorial(s); }

bool m0_condition(const BigNat& c, std::uint64_t m) { return c * big_pow(BigNat(99), m) <= big_pow(BigNat(100), m); }

/// Runs `decide(bits)` at doubling precision until it returns a verdict.
template <class Decide>
bool decide_certified(const PrecisionPolicy& policy, const std::string& what, Decide decide) {
    if (policy.initial_bits < 2 || policy.max_bits < policy.initial_bits) {
        throw ValidationError("precision policy requires 2 <= initial <= max bits");
    }
    for (unsigned bits = policy.initial_bits;; bits = std::min(policy.max_bits, bits * 2)) {
        const Certainty c = decide(bits);
        if (c != Certainty::undecided) return c == Certainty::above;
        if (bits == policy.max_bits) throw PrecisionExhausted(what, policy.max_bits);
    }
}

}  // namespace

BigNat p_upper_bound(unsigned s, std::uint64_t m) {
    if (s < 2 || m < 1) throw ValidationError("p_upper_bound: requires s >= 2 and m >= 1");
    return prefactor(s) * big_pow(factorial(s + 1), m);
}

BigNat n_lower_bound(unsigned t, unsigned l, unsigned s, std::uint64_t m) {
    require_shape(t, l, s, "n_lower_bound");
    if (m < 1) throw ValidationError("n_lower_bound: requires m >= 1");
    const unsigned long k = s - l + t;
    BigNat out = factorial(k * m);
    BigNat denom = 2 * big_pow(factorial(m), k);
    mpz_fdiv_q(out.get_mpz_t(), out.get_mpz_t(), denom.get_mpz_t());
    return out;
}

std::uint64_t m0(unsigned s) {
    if (s < 2) throw ValidationError("m0: requires s >= 2");
    const BigNat c = prefactor(s);
    // Start near log(c) / log(100/99) and settle the boundary exactly.
    const double estimate = (static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2)) * std::log(2.0)) /
                            std::log(100.0 / 99.0);
    std::uint64_t m = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(estimate));
    while (m > 1 && m0_condition(c, m - 1)) --m;
    while (!m0_condition(c, m)) ++m;
    return m;
}

bool geometric_bound_holds(unsigned s, std::uint64_t m) {
    // p_upper * 99^m <= (100 (s+1)!)^m, both sides exact integers.
    return p_upper_bound(s, m) * big_pow(BigNat(99), m) <= big_pow(100 * factorial(s + 1), m);
}

Rational f_exact(unsigned t, unsigned l, unsigned s) {
    require_tl(t, l, "f_value");
    if (s + 1 < l - t + 2) {
        throw ValidationError("f_value: requires s >= l-t+1 (s=" + std::to_string(s) + ", l-t+1=" +
                              std::to_string(l - t + 1) + ")");
    }
    Rational out(big_pow(BigNat(s - l + t), s + 1), big_pow(BigNat(s + 1), s + 1));
    out.canonicalize();
    return out;
}

CertifiedReal f_value(unsigned t, unsigned l, unsigned s, unsigned precision_bits) {
    return CertifiedReal::exact(f_exact(t, l, s), precision_bits);
}

unsigned s0(unsigned t, unsigned l, const PrecisionPolicy& policy) {
    require_tl(t, l, "s0");
    const long k = static_cast<long>(l - t) + 1;
    for (unsigned s = l - t + 1;; ++s) {
        const Rational f = f_exact(t, l, s);
        const bool reached = decide_certified(policy, "s0: f(t,l,s) vs e^{-(l-t)-1}/2", [&](unsigned bits) {
            const CertifiedReal threshold = CertifiedReal::exp_of(-k, bits) * CertifiedReal::exact(Rational(1, 2), bits);
            // f >= threshold  <=>  threshold lies below f
            const Certainty c = threshold.compare(f);
            if (c == Certainty::below) return Certainty::above;
            if (c == Certainty::above) return Certainty::below;
            return Certainty::undecided;
        });
        if (reached) return s;
    }
}

CertifiedReal H_value(unsigned t, unsigned l, unsigned s, unsigned precision_bits) {
    require_shape(t, l, s, "H_value");
    const unsigned bits = precision_bits;
    const auto q = [bits](long num, long den) { return CertifiedReal::exact(Rational(num, den), bits); };
    const auto z = [bits](const BigNat& v) { return CertifiedReal::exact(v, bits); };
    const long exponent = static_cast<long>(s) + 1 - static_cast<long>(l - t) - 1;
    const CertifiedReal growth = CertifiedReal::exp_of(exponent, bits);
    const CertifiedReal root = (z(BigNat(2 * (s + 1))) * CertifiedReal::pi(bits)).sqrt();
    const CertifiedReal power = z(big_pow(BigNat(s - l + t), l - t + 1));
    return q(363, 400) * growth / (root * power) * q(1, 2);
}

bool H_exceeds_one(unsigned t, unsigned l, unsigned s, const PrecisionPolicy& policy) {
    return decide_certified(policy, "H(t,l,s) vs 1",
                            [&](unsigned bits) { return H_value(t, l, s, bits).compare(Rational(1)); });
}

unsigned smallest_admissible_s(unsigned t, unsigned l, const PrecisionPolicy& policy) {
    require_tl(t, l, "smallest_admissible_s");
    for (unsigned s = std::max(s0(t, l, policy), l + 1);; ++s) {
        if (H_exceeds_one(t, l, s, policy)) return s;
    }
}

StirlingEnclosure stirling_enclosure(std::uint64_t n, unsigned precision_bits) {
    if (n < 1) throw ValidationError("stirling_enclosure: requires n >= 1");
    const unsigned bits = precision_bits;
    const BigNat big_n(static_cast<unsigned long>(n));
    const CertifiedReal root = (CertifiedReal::exact(BigNat(2 * big_n), bits) * CertifiedReal::pi(bits)).sqrt();
    CertifiedReal lower = CertifiedReal::exp_of(-static_cast<long>(n), bits) *
                          CertifiedReal::exact(big_pow(big_n, n), bits) * root;
    CertifiedReal upper = CertifiedReal::exact(Rational(12, 11), bits) * lower;
    return {std::move(lower), std::move(upper)};
}

bool stirling_brackets_factorial(std::uint64_t n, const PrecisionPolicy& policy) {
    const Rational exact(factorial(n));
    const bool lower_ok = decide_certified(policy, "Stirling lower side", [&](unsigned bits) {
        const Certainty c = stirling_enclosure(n, bits).lower.compare(exact);
        return c == Certainty::below ? Certainty::above : c == Certainty::above ? Certainty::below : c;
    });
    const bool upper_ok = decide_certified(policy, "Stirling upper side", [&](unsigned bits) {
        return stirling_enclosure(n, bits).upper.compare(exact);
    });
    return lower_ok && upper_ok;
}

BoundsReport bounds_report(unsigned t, unsigned l, unsigned s, std::uint64_t m, const PrecisionPolicy& policy) {
    require_shape(t, l, s, "bounds");
    if (m < 1) throw ValidationError("bounds: requires m >= 1");
    BoundsReport r;
    r.t = t;
    r.l = l;
    r.s = s;
    r.m = m;
    r.p_upper = p_upper_bound(s, m);
    r.n_lower = n_lower_bound(t, l, s, m);
    r.m0 = m0(s);
    r.geometric_bound = geometric_bound_holds(s, m);
    r.f_exact = f_exact(t, l, s);
    r.f_value = f_value(t, l, s, policy.initial_bits);
    r.s0 = s0(t, l, policy);
    r.H_value = H_value(t, l, s, policy.initial_bits);
    r.H_pow_m = r.H_value.pow(m);
    r.admissible = s >= r.s0 && H_exceeds_one(t, l, s, policy);
    return r;
}

}  // namespace contin
