#pragma once

#include <string>
#include <vector>

#include "lahbell/exact.hpp"
#include "lahbell/report.hpp"

namespace lahbell {

enum class Var { X, Lambda };

char var_letter(Var v);

// Dense univariate polynomial over the exact rationals. Canonical form:
// no trailing zero coefficient; the zero polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    explicit Poly(Var v) : var_(v) {}

    static Poly constant(const ExactRat& c, Var v = Var::X);
    static Poly monomial(const ExactRat& c, int degree, Var v = Var::X);
    static Poly from_coeffs(std::vector<ExactRat> coeffs, Var v = Var::X);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const ExactRat& coeff(int i) const;
    const std::vector<ExactRat>& coeffs() const { return coeffs_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const ExactRat& s);
    Poly& operator/=(const ExactRat& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const ExactRat& s) { return a *= s; }
    friend Poly operator*(const ExactRat& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const ExactRat& s) { return a /= s; }

    // Constants compare equal regardless of the variable tag.
    bool operator==(const Poly& o) const;

    ExactRat eval(const ExactRat& point) const;
    Poly times_power(int k) const;  // multiply by var^k

    // Ascending degree, explicit '*': "2*x + x^2", "1 + 4*x", "0".
    std::string str() const;

private:
    std::vector<ExactRat> coeffs_;
    Var var_ = Var::X;
    void trim();
};

// Polynomial in x whose coefficients live in Q[lambda]. Canonical form:
// no trailing zero coefficient in x; every coefficient carries Var::Lambda.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(const ExactRat& c);
    static BiPoly from_x_poly(const Poly& p);        // promote Q[x]
    static BiPoly from_lambda_poly(const Poly& p);   // scalar in lambda
    static BiPoly from_x_coeffs(std::vector<Poly> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly& coeff_x(int i) const;
    const std::vector<Poly>& coeffs_x() const { return coeffs_; }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Poly& lambda_scalar);
    BiPoly& operator*=(const ExactRat& s);
    BiPoly operator-() const;

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, const Poly& s) { return a *= s; }
    friend BiPoly operator*(BiPoly a, const ExactRat& s) { return a *= s; }
    friend BiPoly operator*(const ExactRat& s, BiPoly a) { return a *= s; }

    bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }

    BiPoly times_xpower(int k) const;
    Poly at_lambda(const ExactRat& lambda) const;  // substitute, -> Q[x]
    Poly at_x(const ExactRat& x) const;            // substitute, -> Q[lambda]
    ExactRat eval(const ExactRat& x, const ExactRat& lambda) const;

    std::string str() const;  // "(1 + l) + (2*l)*x + x^2"

private:
    std::vector<Poly> coeffs_;
    void trim();
};

enum class Direction { Rising, Falling };

// <x>_n / (x)_n as polynomials in x; integer coefficients, degree n.
Poly factorial_poly(int n, Direction d);
// <x+shift>_n / (x+shift)_n, still expanded in x.
Poly shifted_factorial_poly(int n, Direction d, const ExactRat& shift);

// <x>_{n,lambda} / (x)_{n,lambda} in Q[lambda][x]; lambda = 1 recovers the
// classical polynomials, lambda = 0 gives x^n.
BiPoly degenerate_factorial_poly(int n, Direction d);
BiPoly shifted_degenerate_factorial_poly(int n, Direction d, const ExactRat& shift);

// Coefficients c_0..c_d with p = sum c_k (x)_k (falling-factorial basis);
// computed by back-substitution on the triangular system.
std::vector<ExactRat> falling_basis_coeffs(const Poly& p);
// Same for the degenerate basis {(x)_{k,lambda}}; coefficients in Q[lambda].
std::vector<Poly> degenerate_falling_basis_coeffs(const BiPoly& p);

Poly lah_bell_poly(int n);
Poly r_lah_bell_poly(int n, int r);

// The lambda-analogue r-Lah number as an element of Q[lambda]:
// (n!/k!) * (r + lambda(n-1))_{n-k,lambda} / (n-k)!; zero when k > n.
Poly lambda_r_lah(int n, int k, int r);
BiPoly lambda_r_lah_bell_poly(int n, int r);

// Right-hand sides of the three Spivey-type recurrences, evaluated
// symbolically; each equals the corresponding Bell-type polynomial of
// index n+m.
Poly spivey_rhs(int n, int m, int r);
BiPoly spivey_rhs_lambda(int n, int m, int r);

enum class DefiningVariant { Classic, RShift, Lambda };

// Expands the rising-factorial side, converts to the (degenerate) falling
// basis and compares coefficient k against lah / r_lah / lambda_r_lah.
// The Classic variant ignores r.
CheckReport defining_relation_check(int n, int r, DefiningVariant variant);

// Both Vandermonde-type identities as exact identities in Q[x, y]
// (the second slot of BiPoly holds y here).
CheckReport vandermonde_check(int n);

}  // namespace lahbell
