#pragma once

#include <map>
#include <string>
#include <utility>

#include "lahbell/exact.hpp"
#include "lahbell/poly.hpp"
#include "lahbell/report.hpp"

namespace lahbell {

// Element of the algebra generated by X (multiply by x) and D (d/dx) with
// DX - XD = 1, stored in normal order: sum of c_{i,j} X^i D^j with every
// X-power left of every D-power. Canonical form stores no zero
// coefficients, so equality is term-map equality.
class WeylOp {
public:
    using Key = std::pair<int, int>;  // (x-power, d-power)

    WeylOp() = default;  // zero operator

    static WeylOp identity();
    static WeylOp monomial(int i, int j, const ExactRat& c = ExactRat(1));
    static WeylOp x();
    static WeylOp d();

    const std::map<Key, ExactRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp& operator*=(const ExactRat& s);
    WeylOp operator-() const;

    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(WeylOp a, const ExactRat& s) { return a *= s; }
    friend WeylOp operator*(const ExactRat& s, WeylOp a) { return a *= s; }

    bool operator==(const WeylOp& o) const { return terms_ == o.terms_; }

    // Ascending (i, j): "1 + 2*XD + X^2D^2"; zero operator prints "0".
    std::string str() const;

private:
    std::map<Key, ExactRat> terms_;
    void add_term(int i, int j, const ExactRat& c);
    friend WeylOp normal_mul(const WeylOp& a, const WeylOp& b);
};

// Canonical product. Reorders each cross term with
//   D^j X^i = sum_s s!·C(i,s)·C(j,s)·X^{i-s} D^{j-s},
// the closed form obtained by iterating the single-step rule DX = XD + 1
// (validated against that rewrite in the test suite).
WeylOp normal_mul(const WeylOp& a, const WeylOp& b);

// Normal-ordered (XD + c)(XD + c + 1)...(XD + c + n - 1); identity for n = 0.
WeylOp op_rising(const ExactInt& c, int n);

// Asserts op_rising(r, n) has term map exactly {(k, k) -> r_lah(n, k, r)}.
CheckReport expansion_check(int n, int r);

// X^i D^j sends x^m to (m)_j x^{m-j+i}; extended linearly over p.
Poly apply_to_poly(const WeylOp& op, const Poly& p);

// q(x) with op(e^x) = q(x) e^x, via X^i D^j e^x = x^i e^x; for
// op_rising(r, n) this is r_lah_bell_poly(n, r).
Poly apply_to_exp(const WeylOp& op);

// Asserts <XD+r+m>_n X^k = X^k sum_l C(n,l) <XD+r>_l <m+k>_{n-l} as
// canonical operators. Rejects k = 0 (the identity is stated for k >= 1;
// that case degenerates to a plain Vandermonde sum).
CheckReport shift_identity_check(int n, int m, int r, int k);

// Asserts <XD+r>_{n+m} = sum_k sum_l C(n,l) Lr(m,k) <m+k>_{n-l}
// X^k <XD+r>_l D^k, plus the factorization
// <XD+r>_{n+m} = <XD+r>_m <XD+r+m>_n in both orders.
CheckReport operator_spivey_check(int n, int m, int r);

}  // namespace lahbell
