#include "lahbell/bigfloat.hpp"

#include <stdexcept>
#include <vector>

namespace lahbell {

namespace {

void check_precision(int precision_bits) {
    if (precision_bits < 2) throw std::invalid_argument("BigFloat: precision too small");
}

}  // namespace

BigFloat::BigFloat(int precision_bits) {
    check_precision(precision_bits);
    mpfr_init2(v_, precision_bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const ExactRat& q, int precision_bits, mpfr_rnd_t rnd) {
    check_precision(precision_bits);
    BigFloat out(precision_bits);
    mpfr_set_q(out.v_, q.get_mpq_t(), rnd);
    return out;
}

BigFloat BigFloat::from_string(const std::string& text, int precision_bits) {
    check_precision(precision_bits);
    BigFloat out(precision_bits);
    if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: malformed decimal literal '" + text + "'");
    return out;
}

BigFloat BigFloat::two_pow(int e, int precision_bits) {
    check_precision(precision_bits);
    BigFloat out(precision_bits);
    mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
    return out;
}

int BigFloat::precision_bits() const { return static_cast<int>(mpfr_get_prec(v_)); }

ExactRat BigFloat::to_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigFloat::to_rational: not finite");
    ExactRat out;
    mpfr_get_q(out.get_mpq_t(), v_);
    return out;
}

std::string BigFloat::str(int significant_digits) const {
    if (significant_digits < 2) significant_digits = 2;
    std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
    return std::string(buf.data());
}

int BigFloat::sign() const { return mpfr_sgn(v_); }

BigFloat BigFloat::abs() const {
    BigFloat out(precision_bits());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision_bits());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

bool BigFloat::operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }

bool BigFloat::operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }

bool BigFloat::operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }

BigFloat BigFloat::exp(const BigFloat& v) {
    BigFloat out(v.precision_bits());
    mpfr_exp(out.v_, v.v_, MPFR_RNDN);
    return out;
}

}  // namespace lahbell
