#pragma once

#include <mpfr.h>

#include <string>

#include "lahbell/exact.hpp"

namespace lahbell {

// Arbitrary-precision binary float. Every value carries its working
// precision; arithmetic rounds to the precision of the left operand.
class BigFloat {
public:
    explicit BigFloat(int precision_bits = 256);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const ExactRat& q, int precision_bits,
                                  mpfr_rnd_t rnd = MPFR_RNDN);
    // Decimal literal like "1e-20" or "0.5"; throws on malformed input.
    static BigFloat from_string(const std::string& text, int precision_bits);
    // 2^e exactly.
    static BigFloat two_pow(int e, int precision_bits);

    int precision_bits() const;

    // Exact conversion: every finite binary float is a dyadic rational.
    ExactRat to_rational() const;

    // Scientific notation with the given number of significant digits.
    std::string str(int significant_digits = 40) const;

    int sign() const;  // -1, 0, +1
    BigFloat abs() const;
    BigFloat operator-() const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }

    bool operator<(const BigFloat& o) const;
    bool operator<=(const BigFloat& o) const;
    bool operator==(const BigFloat& o) const;

    // e^v rounded to nearest at v's precision.
    static BigFloat exp(const BigFloat& v);

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace lahbell
