#include "contin/certified.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "contin/errors.hpp"

namespace contin {

namespace {

std::string mpfr_format(const char* fmt, int digits, mpfr_srcptr x) {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits, x) < 0) throw Error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace

CertifiedReal::CertifiedReal(unsigned precision_bits) {
    mpfr_init2(lo_, precision_bits);
    mpfr_init2(hi_, precision_bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

CertifiedReal::CertifiedReal(const CertifiedReal& other) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

CertifiedReal::CertifiedReal(CertifiedReal&& other) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

CertifiedReal::~CertifiedReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

CertifiedReal CertifiedReal::exact(const BigNat& v, unsigned precision_bits) {
    CertifiedReal out(precision_bits);
    mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
    return out;
}

CertifiedReal CertifiedReal::exact(const Rational& q, unsigned precision_bits) {
    CertifiedReal out(precision_bits);
    mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
    return out;
}

CertifiedReal CertifiedReal::pi(unsigned precision_bits) {
    CertifiedReal out(precision_bits);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
}

CertifiedReal CertifiedReal::exp_of(long k, unsigned precision_bits) {
    CertifiedReal x(precision_bits);
    mpfr_set_si(x.lo_, k, MPFR_RNDD);
    mpfr_set_si(x.hi_, k, MPFR_RNDU);
    return x.exp();
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    CertifiedReal out(std::max(a.precision(), b.precision()));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
    CertifiedReal out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    const unsigned prec = std::max(a.precision(), b.precision());
    CertifiedReal out(prec);
    mpfr_t down, up;
    mpfr_init2(down, prec);
    mpfr_init2(up, prec);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
        for (mpfr_srcptr y : {b.lo_, b.hi_}) {
            mpfr_mul(down, x, y, MPFR_RNDD);
            mpfr_mul(up, x, y, MPFR_RNDU);
            if (first || mpfr_less_p(down, out.lo_)) mpfr_set(out.lo_, down, MPFR_RNDD);
            if (first || mpfr_greater_p(up, out.hi_)) mpfr_set(out.hi_, up, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(down);
    mpfr_clear(up);
    return out;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw Error("certified division by an interval containing 0");
    const unsigned prec = std::max(a.precision(), b.precision());
    CertifiedReal inv(prec);
    // 1/[l, h] = [1/h, 1/l] when 0 is outside [l, h].
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

CertifiedReal CertifiedReal::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw Error("certified sqrt of an interval reaching below 0");
    CertifiedReal out(precision());
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
    return out;
}

CertifiedReal CertifiedReal::exp() const {
    CertifiedReal out(precision());
    mpfr_exp(out.lo_, lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, hi_, MPFR_RNDU);
    return out;
}

CertifiedReal CertifiedReal::pow(unsigned long k) const {
    if (mpfr_sgn(lo_) < 0) {
        // Not needed for any bound here; keep the monotone case only.
        throw Error("certified pow of an interval reaching below 0");
    }
    CertifiedReal out(precision());
    mpfr_pow_ui(out.lo_, lo_, k, MPFR_RNDD);
    mpfr_pow_ui(out.hi_, hi_, k, MPFR_RNDU);
    return out;
}

Certainty CertifiedReal::compare(const Rational& q) const {
    if (mpfr_cmp_q(hi_, q.get_mpq_t()) < 0) return Certainty::below;
    if (mpfr_cmp_q(lo_, q.get_mpq_t()) > 0) return Certainty::above;
    return Certainty::undecided;
}

Certainty CertifiedReal::compare(const CertifiedReal& other) const {
    if (mpfr_less_p(hi_, other.lo_)) return Certainty::below;
    if (mpfr_greater_p(lo_, other.hi_)) return Certainty::above;
    return Certainty::undecided;
}

double CertifiedReal::approx() const {
    mpfr_t mid;
    mpfr_init2(mid, precision() + 1);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    const double out = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return out;
}

std::string CertifiedReal::midpoint_decimal() const {
    mpfr_t mid;
    mpfr_init2(mid, precision());
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    const int digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
    std::string out = mpfr_format("%.*Re", digits, mid);
    mpfr_clear(mid);
    return out;
}

std::string CertifiedReal::radius_decimal() const {
    const unsigned prec = precision();
    mpfr_t mid, r, slack;
    mpfr_inits2(prec, mid, r, slack, static_cast<mpfr_ptr>(nullptr));
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(r, hi_, mid, MPFR_RNDU);
    mpfr_sub(slack, mid, lo_, MPFR_RNDU);
    mpfr_max(r, r, slack, MPFR_RNDU);
    // The printed midpoint carries a relative error below 2^-prec.
    mpfr_abs(slack, mid, MPFR_RNDU);
    mpfr_div_2ui(slack, slack, prec, MPFR_RNDU);
    mpfr_add(r, r, slack, MPFR_RNDU);
    std::string out = mpfr_format("%.*RUe", 6, r);
    mpfr_clears(mid, r, slack, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace contin
