#pragma once

#include <vector>

#include "lahbell/exact.hpp"
#include "lahbell/report.hpp"

namespace lahbell {

enum class TriangleKind { Lah, RLah, Stirling2 };

// Number triangle with rows 0..n_max; row n holds entries for k = 0..n.
// entry(n, k) = 0 for k > n by convention and entry(0, 0) = 1.
struct Triangle {
    TriangleKind kind;
    int r = 0;  // meaningful for RLah only
    std::vector<std::vector<ExactInt>> rows;

    const ExactInt& entry(int n, int k) const;
};

Triangle make_triangle(TriangleKind kind, int n_max, int r = 0);

// Partitions of an n-set into k nonempty linearly ordered blocks:
// (n!/k!)·C(n−1, k−1); zero when k > n or (k = 0, n ≥ 1).
ExactInt lah(int n, int k);

// r-shifted variant (n!/k!)·C(n+r−1, k+r−1); r_lah(n, k, 0) = lah(n, k),
// and for r ≥ 1 the k = 0 column is n!·C(n+r−1, r−1).
ExactInt r_lah(int n, int k, int r);

// Asserts the cross-validation recurrence
//   Lr(n+1, k) = Lr(n, k−1) + (n + k + r)·Lr(n, k)
// for all 0 <= k <= n+1 <= n_max against the closed form. Requires n_max >= 1.
CheckReport r_lah_recurrence_check(int n_max, int r);

// Partitions of an n-set into k nonempty blocks, via the standard
// recurrence {n+1, k} = k{n, k} + {n, k−1}.
ExactInt stirling2(int n, int k);

// Row sum of stirling2: partitions of an n-set.
ExactInt bell(int n);

// Asserts bell(n+m) = sum_{j<=m} sum_{k<=n} C(n,k)·stirling2(m,j)·j^{n−k}·bell(k),
// with the 0^0 = 1 convention for the j = 0, k = n term.
CheckReport spivey_bell_check(int n, int m);

// Fault injection for exercising the verification exit-code contract:
// after this call lah(n, k) returns its true value plus delta. Set before
// any concurrent readers start; delta = 0 restores normal behaviour.
void corrupt_lah_entry_for_testing(int n, int k, const ExactInt& delta);

}  // namespace lahbell
