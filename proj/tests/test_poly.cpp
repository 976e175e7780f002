#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "lahbell/poly.hpp"
#include "lahbell/tables.hpp"

using namespace lahbell;

namespace {

Poly random_int_poly(std::mt19937_64& rng, int max_degree, Var v = Var::X) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-9, 9);
    int d = deg(rng);
    std::vector<ExactRat> cs;
    cs.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
    return Poly::from_coeffs(std::move(cs), v);
}

}  // namespace

TEST_CASE("polynomials trim trailing zeros into canonical form") {
    Poly p = Poly::from_coeffs({ExactRat(1), ExactRat(2), ExactRat(0), ExactRat(0)});
    CHECK(p.degree() == 1);
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly::constant(ExactRat(0)).is_zero());
    CHECK((p - p).is_zero());
    CHECK(p.coeff(5) == 0);
    CHECK(p.coeff(-1) == 0);
}

TEST_CASE("polynomial printing is ascending with explicit stars") {
    CHECK(Poly().str() == "0");
    CHECK(Poly::constant(ExactRat(7)).str() == "7");
    CHECK(lah_bell_poly(2).str() == "2*x + x^2");
    Poly p = Poly::from_coeffs({ExactRat(-1), ExactRat(1)});
    CHECK(p.str() == "-1 + x");
    Poly q = Poly::from_coeffs({ExactRat(0), make_rat(1, 2), ExactRat(-3)});
    CHECK(q.str() == "1/2*x - 3*x^2");
    Poly l = Poly::from_coeffs({ExactRat(0), ExactRat(2)}, Var::Lambda);
    CHECK(l.str() == "2*l");
}

TEST_CASE("polynomial arithmetic is exact") {
    Poly x1 = Poly::from_coeffs({ExactRat(1), ExactRat(1)});
    Poly sq = x1 * x1;
    CHECK(sq == Poly::from_coeffs({ExactRat(1), ExactRat(2), ExactRat(1)}));
    CHECK(sq.eval(ExactRat(3)) == 16);
    CHECK(sq.eval(make_rat(-1, 2)) == make_rat(1, 4));
    CHECK((sq / ExactRat(2)).coeff(1) == 1);
    CHECK_THROWS_AS(sq / ExactRat(0), std::invalid_argument);
    CHECK(x1.times_power(2) == Poly::from_coeffs({ExactRat(0), ExactRat(0), ExactRat(1), ExactRat(1)}));

    Poly in_l = Poly::monomial(ExactRat(1), 1, Var::Lambda);
    CHECK_THROWS_AS(x1 * in_l, std::invalid_argument);
    // constants carry no variable identity
    CHECK(Poly::constant(ExactRat(3), Var::X) == Poly::constant(ExactRat(3), Var::Lambda));
}

TEST_CASE("rising and falling factorial polynomials") {
    CHECK(factorial_poly(0, Direction::Rising) == Poly::constant(ExactRat(1)));
    CHECK(factorial_poly(2, Direction::Rising) ==
          Poly::from_coeffs({ExactRat(0), ExactRat(1), ExactRat(1)}));
    CHECK(factorial_poly(2, Direction::Falling) ==
          Poly::from_coeffs({ExactRat(0), ExactRat(-1), ExactRat(1)}));
    CHECK(shifted_factorial_poly(2, Direction::Rising, ExactRat(1)) ==
          Poly::from_coeffs({ExactRat(2), ExactRat(3), ExactRat(1)}));
    // evaluating the polynomial agrees with the pointwise product
    for (int n = 0; n <= 8; ++n) {
        CHECK(factorial_poly(n, Direction::Rising).eval(make_rat(7, 2)) ==
              rising_factorial(make_rat(7, 2), n));
        CHECK(factorial_poly(n, Direction::Falling).eval(make_rat(7, 2)) ==
              falling_factorial(make_rat(7, 2), n));
    }
}

TEST_CASE("degenerate factorial polynomials carry lambda in their coefficients") {
    BiPoly f2 = degenerate_factorial_poly(2, Direction::Falling);
    CHECK(f2.degree_x() == 2);
    CHECK(f2.coeff_x(2) == Poly::constant(ExactRat(1), Var::Lambda));
    CHECK(f2.coeff_x(1) == Poly::from_coeffs({ExactRat(0), ExactRat(-1)}, Var::Lambda));
    CHECK(f2.coeff_x(0).is_zero());
    // lambda = 1 recovers the classical polynomial, lambda = 0 gives x^n
    for (int n = 0; n <= 6; ++n) {
        CHECK(degenerate_factorial_poly(n, Direction::Rising).at_lambda(ExactRat(1)) ==
              factorial_poly(n, Direction::Rising));
        CHECK(degenerate_factorial_poly(n, Direction::Falling).at_lambda(ExactRat(0)) ==
              Poly::monomial(ExactRat(1), n));
    }
    CHECK(shifted_degenerate_factorial_poly(2, Direction::Rising, ExactRat(1))
              .eval(ExactRat(2), make_rat(1, 2)) == make_rat(21, 2));
}

TEST_CASE("falling-basis conversion matches hand-worked expansions") {
    CHECK(falling_basis_coeffs(Poly::constant(ExactRat(1))) ==
          std::vector<ExactRat>{ExactRat(1)});
    CHECK(falling_basis_coeffs(Poly::monomial(ExactRat(1), 2)) ==
          std::vector<ExactRat>{ExactRat(0), ExactRat(1), ExactRat(1)});
    CHECK(falling_basis_coeffs(factorial_poly(2, Direction::Rising)) ==
          std::vector<ExactRat>{ExactRat(0), ExactRat(2), ExactRat(1)});
}

TEST_CASE("falling-basis conversion round-trips random polynomials") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Poly p = random_int_poly(rng, 12);
        auto cs = falling_basis_coeffs(p);
        Poly back(Var::X);
        for (std::size_t k = 0; k < cs.size(); ++k)
            back += factorial_poly(static_cast<int>(k), Direction::Falling) * cs[k];
        CHECK(back == p);
    }
}

TEST_CASE("degenerate falling-basis conversion matches hand-worked expansions") {
    // x^2 = lambda (x)_{1,lambda} + (x)_{2,lambda}
    auto cs = degenerate_falling_basis_coeffs(BiPoly::from_x_poly(Poly::monomial(ExactRat(1), 2)));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].is_zero());
    CHECK(cs[1] == Poly::from_coeffs({ExactRat(0), ExactRat(1)}, Var::Lambda));
    CHECK(cs[2] == Poly::constant(ExactRat(1), Var::Lambda));
    // <x>_{2,lambda} = 2 lambda (x)_{1,lambda} + (x)_{2,lambda}
    auto rs = degenerate_falling_basis_coeffs(degenerate_factorial_poly(2, Direction::Rising));
    REQUIRE(rs.size() == 3);
    CHECK(rs[1] == Poly::from_coeffs({ExactRat(0), ExactRat(2)}, Var::Lambda));
    CHECK(rs[2] == Poly::constant(ExactRat(1), Var::Lambda));
    // <x+1>_{2,lambda} = (x+1)(x+1+lambda) expands to [1+lambda, 2+2lambda, 1]
    auto ss = degenerate_falling_basis_coeffs(
        shifted_degenerate_factorial_poly(2, Direction::Rising, ExactRat(1)));
    REQUIRE(ss.size() == 3);
    CHECK(ss[0] == Poly::from_coeffs({ExactRat(1), ExactRat(1)}, Var::Lambda));
    CHECK(ss[1] == Poly::from_coeffs({ExactRat(2), ExactRat(2)}, Var::Lambda));
    CHECK(ss[2] == Poly::constant(ExactRat(1), Var::Lambda));
}

TEST_CASE("degenerate falling-basis conversion round-trips random bivariate polynomials") {
    std::mt19937_64 rng(20240812);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 30; ++trial) {
        int d = deg(rng);
        std::vector<Poly> coeffs;
        coeffs.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) coeffs.push_back(random_int_poly(rng, 3, Var::Lambda));
        BiPoly p = BiPoly::from_x_coeffs(std::move(coeffs));
        auto cs = degenerate_falling_basis_coeffs(p);
        BiPoly back;
        for (std::size_t k = 0; k < cs.size(); ++k)
            back += degenerate_factorial_poly(static_cast<int>(k), Direction::Falling) * cs[k];
        CHECK(back == p);
    }
}

TEST_CASE("bell-type polynomial families match frozen small cases") {
    CHECK(lah_bell_poly(0) == Poly::constant(ExactRat(1)));
    CHECK(lah_bell_poly(2) == Poly::from_coeffs({ExactRat(0), ExactRat(2), ExactRat(1)}));
    CHECK(lah_bell_poly(3).eval(ExactRat(1)) == 13);
    CHECK(r_lah_bell_poly(1, 1) == Poly::from_coeffs({ExactRat(1), ExactRat(1)}));
    CHECK(r_lah_bell_poly(2, 1) ==
          Poly::from_coeffs({ExactRat(2), ExactRat(4), ExactRat(1)}));
    for (int n = 0; n <= 8; ++n) CHECK(r_lah_bell_poly(n, 0) == lah_bell_poly(n));
}

TEST_CASE("lah-bell polynomials have degree n, unit leading coefficient, nonnegative entries") {
    for (int n = 0; n <= 12; ++n) {
        Poly p = lah_bell_poly(n);
        CHECK(p.degree() == n);
        CHECK(p.coeff(n) == 1);
        for (int k = 0; k <= n; ++k) {
            CHECK(p.coeff(k) >= 0);
            CHECK(is_integer(p.coeff(k)));
        }
    }
}

TEST_CASE("lambda analogue entries match frozen polynomials in lambda") {
    for (int n = 0; n <= 8; ++n) CHECK(lambda_r_lah(n, n, 3) == Poly::constant(ExactRat(1)));
    CHECK(lambda_r_lah(2, 1, 0) == Poly::from_coeffs({ExactRat(0), ExactRat(2)}, Var::Lambda));
    CHECK(lambda_r_lah(2, 1, 1) == Poly::from_coeffs({ExactRat(2), ExactRat(2)}, Var::Lambda));
    CHECK(lambda_r_lah(2, 0, 1) == Poly::from_coeffs({ExactRat(1), ExactRat(1)}, Var::Lambda));
    CHECK(lambda_r_lah(1, 3, 2).is_zero());
}

TEST_CASE("lambda analogue reduces to the integer triangle at lambda = 1") {
    for (int n = 0; n <= 15; ++n)
        for (int r = 0; r <= 4; ++r)
            for (int k = 0; k <= n; ++k)
                CHECK(lambda_r_lah(n, k, r).eval(ExactRat(1)) == ExactRat(r_lah(n, k, r)));
}

TEST_CASE("bivariate bell-type family prints canonically and reduces at lambda = 1") {
    CHECK(lambda_r_lah_bell_poly(0, 2) == BiPoly::constant(ExactRat(1)));
    CHECK(lambda_r_lah_bell_poly(2, 1).str() == "1 + l + (2 + 2*l)*x + x^2");
    for (int n = 0; n <= 10; ++n)
        for (int r = 0; r <= 3; ++r)
            CHECK(lambda_r_lah_bell_poly(n, r).at_lambda(ExactRat(1)) ==
                  r_lah_bell_poly(n, r));
}

TEST_CASE("spivey double sum collapses correctly at m = 0") {
    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= 2; ++r) CHECK(spivey_rhs(n, 0, r) == r_lah_bell_poly(n, r));
}

TEST_CASE("spivey recurrence reproduces the polynomial family") {
    CHECK(spivey_rhs(1, 1, 0) ==
          Poly::from_coeffs({ExactRat(0), ExactRat(2), ExactRat(1)}));
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; n + m <= 8; ++m) CHECK(spivey_rhs(n, m, 0) == lah_bell_poly(n + m));
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; n + m <= 6; ++m)
            for (int r = 1; r <= 3; ++r)
                CHECK(spivey_rhs(n, m, r) == r_lah_bell_poly(n + m, r));
}

TEST_CASE("bivariate spivey recurrence holds with both variables formal") {
    BiPoly expect = lambda_r_lah_bell_poly(2, 0);
    CHECK(spivey_rhs_lambda(1, 1, 0) == expect);
    CHECK(expect.str() == "(2*l)*x + x^2");
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; n + m <= 5; ++m)
            for (int r = 0; r <= 2; ++r)
                CHECK(spivey_rhs_lambda(n, m, r) == lambda_r_lah_bell_poly(n + m, r));
}

TEST_CASE("bivariate spivey sum reduces to the plain one at lambda = 1") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; n + m <= 4; ++m)
            for (int r = 0; r <= 2; ++r)
                CHECK(spivey_rhs_lambda(n, m, r).at_lambda(ExactRat(1)) ==
                      spivey_rhs(n, m, r));
}

TEST_CASE("defining relation checks pass across all variants") {
    for (int n = 0; n <= 10; ++n)
        for (int r = 0; r <= 4; ++r) {
            CHECK(defining_relation_check(n, r, DefiningVariant::Classic).ok);
            CHECK(defining_relation_check(n, r, DefiningVariant::RShift).ok);
            CHECK(defining_relation_check(n, r, DefiningVariant::Lambda).ok);
        }
    // the classic variant has no r dependence
    CHECK(defining_relation_check(7, 0, DefiningVariant::Classic).ok ==
          defining_relation_check(7, 5, DefiningVariant::Classic).ok);
}

TEST_CASE("vandermonde convolution identities hold bivariately") {
    for (int n = 0; n <= 12; ++n) CHECK(vandermonde_check(n).ok);
}
