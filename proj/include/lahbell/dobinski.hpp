#pragma once

#include <optional>

#include "lahbell/bigfloat.hpp"
#include "lahbell/exact.hpp"

namespace lahbell {

// Outcome of one truncated-series evaluation. The approximation and the
// exact polynomial value satisfy
//   |approx - exact_reference| <= tail_bound + rounding allowance,
// where the allowance is a few ulps at the working precision (asserted in
// the test suite as 2^(-precision_bits/2)).
struct DobinskiResult {
    BigFloat approx;
    BigFloat tail_bound;
    int terms_used = 0;
    ExactRat exact_reference;
};

// Sums the exponentially weighted series
//   e^{-x}   sum_k <k+r>_n / k! x^k                      (no lambda)
//   e^{-x/L} sum_k <Lk+r>_{n,L} / k! (x/L)^k             (lambda = L)
// with exact rational terms, stopping at the first index K >= K0 =
// ceil(2(x/min(L,1) + n + r)) + 2 where |term_K| < eps/4. Beyond K0 the
// term ratio is below 1/2, so the dropped tail is under 2|term_K|, which
// is reported as tail_bound. exact_reference is the corresponding
// polynomial family value at (x, lambda).
//
// Requires x > 0, eps > 0, lambda (when given) > 0, precision_bits >= 128.
DobinskiResult dobinski_eval(int n, int r, const ExactRat& x,
                             const std::optional<ExactRat>& lambda, const BigFloat& eps,
                             int precision_bits = 256);

// Exact value of |term_{k+1}/term_k| for the series above:
//   x' (k + rho + n) / ((k+1)(k + rho))
// with x' = x or x/lambda and rho = r or r/lambda. Valid as an upper bound
// and monotonically decreasing to 0 in k. Requires k >= 1.
ExactRat term_ratio_bound(int n, int r, const ExactRat& x,
                          const std::optional<ExactRat>& lambda, int k);

// k-th series term as an exact rational (the lambda^n factor included);
// exposed so tests can cross-check the stopping rule and ratio bound.
ExactRat dobinski_term(int n, int r, const ExactRat& x,
                       const std::optional<ExactRat>& lambda, int k);

}  // namespace lahbell
