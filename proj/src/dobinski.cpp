#include "lahbell/dobinski.hpp"

#include <stdexcept>

#include "lahbell/poly.hpp"

namespace lahbell {

namespace {

struct SeriesParams {
    ExactRat y;      // x or x/lambda
    ExactRat rho;    // r or r/lambda
    ExactRat scale;  // 1 or lambda^n
};

SeriesParams series_params(int n, int r, const ExactRat& x,
                           const std::optional<ExactRat>& lambda) {
    if (n < 0 || r < 0) throw std::invalid_argument("dobinski: negative argument");
    if (x <= 0) throw std::invalid_argument("dobinski: x must be positive");
    SeriesParams p{x, ExactRat(r), ExactRat(1)};
    if (lambda) {
        if (*lambda <= 0)
            throw std::invalid_argument("dobinski: lambda must be positive");
        p.y = x / *lambda;
        p.rho = ExactRat(r) / *lambda;
        for (int i = 0; i < n; ++i) p.scale *= *lambda;
    }
    return p;
}

// scale * <k + rho>_n / k! * y^k; all terms are nonnegative here.
ExactRat term_value(const SeriesParams& p, int n, int k) {
    ExactRat t = p.scale * rising_factorial(p.rho + ExactRat(k), n);
    t /= ExactRat(factorial(k));
    ExactRat yk(1);
    for (int i = 0; i < k; ++i) yk *= p.y;
    return t * yk;
}

}  // namespace

ExactRat dobinski_term(int n, int r, const ExactRat& x,
                       const std::optional<ExactRat>& lambda, int k) {
    if (k < 0) throw std::invalid_argument("dobinski_term: negative k");
    return term_value(series_params(n, r, x, lambda), n, k);
}

ExactRat term_ratio_bound(int n, int r, const ExactRat& x,
                          const std::optional<ExactRat>& lambda, int k) {
    if (k < 1) throw std::invalid_argument("term_ratio_bound: k must be >= 1");
    SeriesParams p = series_params(n, r, x, lambda);
    // term_{k+1}/term_k = y <k+1+rho>_n / <k+rho>_n / (k+1)
    //                   = y (k + rho + n) / ((k+1)(k + rho)).
    ExactRat kq(k);
    return p.y * (kq + p.rho + ExactRat(n)) / ((kq + 1) * (kq + p.rho));
}

DobinskiResult dobinski_eval(int n, int r, const ExactRat& x,
                             const std::optional<ExactRat>& lambda, const BigFloat& eps,
                             int precision_bits) {
    if (precision_bits < 128)
        throw std::invalid_argument("dobinski_eval: precision_bits must be >= 128");
    if (eps.sign() <= 0) throw std::invalid_argument("dobinski_eval: eps must be positive");
    SeriesParams p = series_params(n, r, x, lambda);

    // Threshold beyond which the term ratio is provably below 1/2:
    // for k >= 2(x/min(lambda,1) + n + r) + 2 we have
    // y(k + rho + n)/((k+1)(k + rho)) <= y(k+n)/k^2 < 1/2.
    ExactRat k0q = ExactRat(2) * (p.y > x ? p.y : x) + ExactRat(2 * (n + r));
    long k0 = static_cast<long>(mpz_class(k0q.get_num() / k0q.get_den()).get_si()) + 3;

    const ExactRat eps_quarter = eps.to_rational() / ExactRat(4);

    ExactRat sum(0);
    ExactRat term;
    int k = 0;
    for (;; ++k) {
        term = term_value(p, n, k);
        sum += term;
        if (k >= k0 && term < eps_quarter) break;
        if (k > 1000000) throw std::runtime_error("dobinski_eval: series failed to settle");
    }

    DobinskiResult out{BigFloat(precision_bits), BigFloat(precision_bits), k + 1,
                       ExactRat(0)};
    BigFloat e_neg_y = BigFloat::exp(-BigFloat::from_rational(p.y, precision_bits));
    out.approx = e_neg_y * BigFloat::from_rational(sum, precision_bits);
    // Geometric tail with ratio < 1/2 from term K onward, and e^{-y} < 1,
    // so 2|term_K| dominates the dropped mass; rounded upward.
    out.tail_bound =
        BigFloat::from_rational(ExactRat(2) * term, precision_bits, MPFR_RNDU);
    out.exact_reference = lambda ? lambda_r_lah_bell_poly(n, r).eval(x, *lambda)
                                 : r_lah_bell_poly(n, r).eval(x);
    return out;
}

}  // namespace lahbell
