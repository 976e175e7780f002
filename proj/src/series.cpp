#include "lahbell/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lahbell/poly.hpp"
#include "lahbell/tables.hpp"

namespace lahbell {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, ExactRat(0));
}

TruncSeries TruncSeries::constant(const ExactRat& c, int order) {
    TruncSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(const ExactRat& c, int degree, int order) {
    if (degree < 0) throw std::invalid_argument("TruncSeries::monomial: negative degree");
    TruncSeries s(order);
    if (degree <= order) s.c_[static_cast<std::size_t>(degree)] = c;
    return s;
}

const ExactRat& TruncSeries::coeff(int n) const {
    static const ExactRat zero(0);
    if (n < 0 || n > order()) return zero;
    return c_[static_cast<std::size_t>(n)];
}

void TruncSeries::set_coeff(int n, const ExactRat& v) {
    if (n < 0 || n > order()) throw std::out_of_range("TruncSeries::set_coeff");
    c_[static_cast<std::size_t>(n)] = v;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const ExactRat& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

ExactRat TruncSeries::egf_coeff(int n) const {
    return ExactRat(factorial(n)) * coeff(n);
}

TruncSeries binomial_series(const ExactRat& exponent, const ExactRat& scale, int order) {
    TruncSeries s(order);
    // binomial(exponent + n - 1, n) via the ratio recurrence
    // c_{n} = c_{n-1} * (exponent + n - 1)/n * scale, starting from c_0 = 1.
    ExactRat c(1);
    s.set_coeff(0, c);
    for (int n = 1; n <= order; ++n) {
        c *= (exponent + ExactRat(n - 1)) / ExactRat(n) * scale;
        s.set_coeff(n, c);
    }
    return s;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncSeries out(order);
    for (int n = 0; n <= order; ++n) {
        ExactRat acc(0);
        for (int i = 0; i <= n; ++i) acc += a.coeff(i) * b.coeff(n - i);
        out.set_coeff(n, acc);
    }
    return out;
}

TruncSeries series_exp(const TruncSeries& a) {
    if (a.coeff(0) != 0)
        throw std::invalid_argument("series_exp: nonzero constant term");
    const int order = a.order();
    TruncSeries out(order);
    out.set_coeff(0, ExactRat(1));
    for (int n = 1; n <= order; ++n) {
        ExactRat acc(0);
        for (int k = 1; k <= n; ++k) acc += ExactRat(k) * a.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, acc / ExactRat(n));
    }
    return out;
}

TruncSeries series_pow_int(const TruncSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("series_pow_int: negative power");
    TruncSeries out = TruncSeries::constant(ExactRat(1), a.order());
    for (int i = 0; i < k; ++i) out = series_mul(out, a);
    return out;
}

namespace {

// t/(1 - scale*t): zero constant term, coefficient scale^{n-1} for n >= 1.
TruncSeries t_over_one_minus(const ExactRat& scale, int order) {
    TruncSeries s(order);
    ExactRat c(1);
    for (int n = 1; n <= order; ++n) {
        s.set_coeff(n, c);
        c *= scale;
    }
    return s;
}

CheckReport egf_mismatch(const char* what, int n, const ExactRat& got,
                         const ExactRat& expect, const std::string& params) {
    std::ostringstream os;
    os << what << " " << params << " n=" << n << ": n![t^n] = " << rational_str(got)
       << " != " << rational_str(expect);
    return CheckReport::fail(os.str());
}

}  // namespace

CheckReport gf_check_lah(int k, int r, int order) {
    if (k < 0 || r < 0 || order < 0)
        throw std::invalid_argument("gf_check_lah: negative argument");
    if (k > order) throw std::invalid_argument("gf_check_lah: k exceeds order");
    const ExactRat inv_kfact = make_rat(ExactInt(1), factorial(k));

    TruncSeries route_a =
        series_mul(series_pow_int(t_over_one_minus(ExactRat(1), order), k),
                   binomial_series(ExactRat(r), ExactRat(1), order)) *
        inv_kfact;
    TruncSeries route_b =
        series_mul(TruncSeries::monomial(inv_kfact, k, order),
                   binomial_series(ExactRat(k + r), ExactRat(1), order));

    std::ostringstream params;
    params << "k=" << k << " r=" << r;
    if (!(route_a == route_b)) {
        std::ostringstream os;
        os << "gf_lah " << params.str() << ": the two closed-form series disagree";
        return CheckReport::fail(os.str());
    }
    for (int n = 0; n <= order; ++n) {
        ExactRat got = route_a.egf_coeff(n);
        ExactRat expect = ExactRat(r_lah(n, k, r));
        if (got != expect) return egf_mismatch("gf_lah", n, got, expect, params.str());
    }
    return CheckReport::pass();
}

CheckReport gf_check_bell(int r, int order, const ExactRat& x) {
    if (r < 0 || order < 0) throw std::invalid_argument("gf_check_bell: negative argument");
    TruncSeries lhs =
        series_mul(binomial_series(ExactRat(r), ExactRat(1), order),
                   series_exp(t_over_one_minus(ExactRat(1), order) * x));
    std::ostringstream params;
    params << "r=" << r << " x=" << rational_str(x);
    for (int n = 0; n <= order; ++n) {
        ExactRat got = lhs.egf_coeff(n);
        ExactRat expect = r_lah_bell_poly(n, r).eval(x);
        if (got != expect) return egf_mismatch("gf_bell", n, got, expect, params.str());
    }
    return CheckReport::pass();
}

CheckReport gf_check_lambda_number(int r, const ExactRat& lambda, int k, int order) {
    if (r < 0 || k < 0 || order < 0)
        throw std::invalid_argument("gf_check_lambda_number: negative argument");
    if (lambda == 0) throw std::invalid_argument("gf_check_lambda_number: lambda = 0");
    const ExactRat r_over_lambda = ExactRat(r) / lambda;
    TruncSeries lhs =
        series_mul(series_pow_int(t_over_one_minus(lambda, order), k),
                   binomial_series(r_over_lambda, lambda, order)) *
        make_rat(ExactInt(1), factorial(k));
    std::ostringstream params;
    params << "r=" << r << " lambda=" << rational_str(lambda) << " k=" << k;
    for (int n = 0; n <= order; ++n) {
        ExactRat got = lhs.egf_coeff(n);
        ExactRat expect = lambda_r_lah(n, k, r).eval(lambda);
        if (got != expect)
            return egf_mismatch("gf_lambda_number", n, got, expect, params.str());
    }
    return CheckReport::pass();
}

CheckReport gf_check_lambda_poly(int r, const ExactRat& lambda, const ExactRat& x,
                                 int order) {
    if (r < 0 || order < 0)
        throw std::invalid_argument("gf_check_lambda_poly: negative argument");
    if (lambda == 0) throw std::invalid_argument("gf_check_lambda_poly: lambda = 0");
    const ExactRat r_over_lambda = ExactRat(r) / lambda;
    // (x/lambda)(1/(1-lambda t) - 1) collapses to x t/(1-lambda t).
    TruncSeries lhs =
        series_mul(series_exp(t_over_one_minus(lambda, order) * x),
                   binomial_series(r_over_lambda, lambda, order));
    std::ostringstream params;
    params << "r=" << r << " lambda=" << rational_str(lambda) << " x=" << rational_str(x);
    for (int n = 0; n <= order; ++n) {
        ExactRat got = lhs.egf_coeff(n);
        ExactRat expect = lambda_r_lah_bell_poly(n, r).eval(x, lambda);
        if (got != expect)
            return egf_mismatch("gf_lambda_poly", n, got, expect, params.str());
    }
    return CheckReport::pass();
}

CheckReport two_variable_spivey_spot_check(int n, int m, int r, const ExactRat& lambda,
                                           const ExactRat& t_val) {
    if (n < 0 || m < 0 || r < 0)
        throw std::invalid_argument("two_variable_spivey_spot_check: negative argument");
    if (lambda == 0)
        throw std::invalid_argument("two_variable_spivey_spot_check: lambda = 0");

    const ExactRat r_over_lambda = ExactRat(r) / lambda;
    ExactRat reference = lambda_r_lah_bell_poly(n + m, r).eval(t_val, lambda);

    // One shot: the generating function in the combined variable s = x + y;
    // the (n, m) coefficient of the bivariate expansion is
    // [s^{n+m}]·(n+m)! / (n! m!) times nothing extra, so it suffices to
    // compare (n+m)!·[s^{n+m}].
    TruncSeries one_shot =
        series_mul(binomial_series(r_over_lambda, lambda, n + m),
                   series_exp(t_over_one_minus(lambda, n + m) * t_val));
    ExactRat one_shot_val = one_shot.egf_coeff(n + m);

    // Factored: peel off the y-derivatives of order m, leaving a series in
    // x alone whose n-th coefficient carries the same polynomial value.
    TruncSeries weight(n);
    {
        TruncSeries acc(n);
        for (int j = 0; j <= m; ++j) {
            ExactRat lmj = lambda_r_lah(m, j, r).eval(lambda);
            if (lmj == 0) continue;
            ExactRat tj(1);
            for (int i = 0; i < j; ++i) tj *= t_val;
            acc += binomial_series(ExactRat(m + j), lambda, n) * (lmj * tj);
        }
        weight = acc;
    }
    TruncSeries base =
        series_mul(binomial_series(r_over_lambda, lambda, n),
                   series_exp(t_over_one_minus(lambda, n) * t_val));
    ExactRat factored_val = series_mul(base, weight).egf_coeff(n);

    if (one_shot_val != reference || factored_val != reference) {
        std::ostringstream os;
        os << "two-variable spot check n=" << n << " m=" << m << " r=" << r
           << " lambda=" << rational_str(lambda) << " t=" << rational_str(t_val)
           << ": one-shot " << rational_str(one_shot_val) << ", factored "
           << rational_str(factored_val) << ", family value " << rational_str(reference);
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

}  // namespace lahbell
