#pragma once

#include <vector>

#include "lahbell/exact.hpp"
#include "lahbell/report.hpp"

namespace lahbell {

// Formal power series in t over the exact rationals, truncated at a fixed
// order N: coefficients for t^0..t^N. Arithmetic is exact up to the order
// and never reads beyond it.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    static TruncSeries constant(const ExactRat& c, int order);
    static TruncSeries monomial(const ExactRat& c, int degree, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const ExactRat& coeff(int n) const;
    void set_coeff(int n, const ExactRat& v);

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const ExactRat& s);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const ExactRat& s) { return a *= s; }
    friend TruncSeries operator*(const ExactRat& s, TruncSeries a) { return a *= s; }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

    // Coefficient of t^n times n!; the quantity compared in every
    // exponential-generating-function check.
    ExactRat egf_coeff(int n) const;

private:
    std::vector<ExactRat> c_;
};

// (1 - scale*t)^(-exponent): coefficient of t^n is
// binomial(exponent + n - 1, n) * scale^n.
TruncSeries binomial_series(const ExactRat& exponent, const ExactRat& scale, int order);

// Cauchy product truncated at the smaller of the two orders.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// exp(a) via the recurrence n*b_n = sum_k k*a_k*b_{n-k}; requires a(0) = 0.
TruncSeries series_exp(const TruncSeries& a);

// a^k by repeated multiplication; k = 0 gives the constant series 1.
TruncSeries series_pow_int(const TruncSeries& a, int k);

// Builds (1/k!) (t/(1-t))^k (1/(1-t))^r two independent ways
// (power of t/(1-t) versus t^k times a single binomial series), asserts the
// two series agree, and asserts n!·[t^n] = r_lah(n, k, r) for n <= order.
CheckReport gf_check_lah(int k, int r, int order);

// Builds (1/(1-t))^r e^{x(1/(1-t)-1)} with x a fixed rational and asserts
// n!·[t^n] = r_lah_bell_poly(n, r) at x, for n <= order.
CheckReport gf_check_bell(int r, int order, const ExactRat& x);

// (1/k!) (t/(1-lambda t))^k (1/(1-lambda t))^{r/lambda}: asserts
// n!·[t^n] = lambda_r_lah(n, k, r) at the given lambda. Rejects lambda = 0.
CheckReport gf_check_lambda_number(int r, const ExactRat& lambda, int k, int order);

// e^{(x/lambda)(1/(1-lambda t)-1)} (1/(1-lambda t))^{r/lambda}: asserts
// n!·[t^n] = lambda_r_lah_bell_poly(n, r) at (x, lambda). Rejects lambda = 0.
CheckReport gf_check_lambda_poly(int r, const ExactRat& lambda, const ExactRat& x,
                                 int order);

// Expands the bivariate generating function of the degenerate Bell-type
// polynomials once directly in x + y and once through the factored form
// that drives the two-index recurrence, and compares the (n, m) coefficient
// against the polynomial family value at (t_val, lambda). Rejects lambda = 0.
CheckReport two_variable_spivey_spot_check(int n, int m, int r, const ExactRat& lambda,
                                           const ExactRat& t_val);

}  // namespace lahbell
