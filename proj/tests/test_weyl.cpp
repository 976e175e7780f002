#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lahbell/tables.hpp"
#include "lahbell/weyl.hpp"
#include "naive_weyl.hpp"

using namespace lahbell;

TEST_CASE("commutation and small products in normal order") {
    WeylOp xd = normal_mul(WeylOp::x(), WeylOp::d());
    CHECK(xd == WeylOp::monomial(1, 1));
    WeylOp dx = normal_mul(WeylOp::d(), WeylOp::x());
    CHECK(dx == WeylOp::monomial(1, 1) + WeylOp::identity());
    CHECK(dx - xd == WeylOp::identity());
    WeylOp xd2 = normal_mul(xd, xd);
    CHECK(xd2 == WeylOp::monomial(2, 2) + WeylOp::monomial(1, 1));
    CHECK(xd2.str() == "XD + X^2D^2");
    CHECK(WeylOp().str() == "0");
    CHECK((WeylOp::identity() * ExactRat(2) + WeylOp::monomial(1, 1)).str() == "2 + XD");
}

TEST_CASE("rising products of XD expand with triangle coefficients") {
    CHECK(op_rising(0, 0) == WeylOp::identity());
    CHECK(op_rising(0, 2).str() == "2*XD + X^2D^2");
    CHECK(op_rising(1, 1).str() == "1 + XD");
    for (int n = 0; n <= 10; ++n)
        for (int r = 0; r <= 4; ++r) CHECK(expansion_check(n, r).ok);
    CHECK_THROWS_AS(op_rising(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(op_rising(0, -1), std::invalid_argument);
}

TEST_CASE("closed-form reordering matches axiomatic rewriting on single terms") {
    for (int i1 = 0; i1 <= 5; ++i1)
        for (int j1 = 0; j1 <= 5; ++j1)
            for (int i2 = 0; i2 <= 5; ++i2)
                for (int j2 = 0; j2 <= 5; ++j2) {
                    WeylOp a = WeylOp::monomial(i1, j1);
                    WeylOp b = WeylOp::monomial(i2, j2);
                    WeylOp kernel = normal_mul(a, b);
                    WeylOp reference = naive::to_weyl(
                        naive::normalize(naive::mul(naive::from_weyl(a), naive::from_weyl(b))));
                    CHECK(kernel == reference);
                }
}

TEST_CASE("closed-form reordering matches axiomatic rewriting on random sums") {
    std::mt19937_64 rng(771177);
    std::uniform_int_distribution<int> pw(0, 4);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(1, 3);
    auto random_op = [&] {
        WeylOp op;
        int t = nterms(rng);
        for (int i = 0; i < t; ++i)
            op += WeylOp::monomial(pw(rng), pw(rng), ExactRat(coeff(rng)));
        return op;
    };
    for (int trial = 0; trial < 100; ++trial) {
        WeylOp a = random_op();
        WeylOp b = random_op();
        WeylOp kernel = normal_mul(a, b);
        WeylOp reference = naive::to_weyl(
            naive::normalize(naive::mul(naive::from_weyl(a), naive::from_weyl(b))));
        CHECK(kernel == reference);
    }
}

TEST_CASE("normal multiplication is associative and distributes over addition") {
    WeylOp a = WeylOp::monomial(2, 1, ExactRat(3)) + WeylOp::d();
    WeylOp b = WeylOp::monomial(1, 2) - WeylOp::identity();
    WeylOp c = WeylOp::x() + WeylOp::monomial(0, 2, make_rat(1, 2));
    CHECK(normal_mul(normal_mul(a, b), c) == normal_mul(a, normal_mul(b, c)));
    CHECK(normal_mul(a, b + c) == normal_mul(a, b) + normal_mul(a, c));
    CHECK(normal_mul(a + b, c) == normal_mul(a, c) + normal_mul(b, c));
}

TEST_CASE("operator action on polynomials is a module action") {
    Poly p = Poly::from_coeffs({ExactRat(1), ExactRat(-2), ExactRat(0), ExactRat(5)});
    WeylOp a = WeylOp::monomial(1, 2, ExactRat(2)) + WeylOp::identity();
    WeylOp b = WeylOp::monomial(0, 1) + WeylOp::monomial(3, 0);
    CHECK(apply_to_poly(normal_mul(a, b), p) == apply_to_poly(a, apply_to_poly(b, p)));
    CHECK(apply_to_poly(WeylOp::d(), Poly::monomial(ExactRat(1), 4)) ==
          Poly::monomial(ExactRat(4), 3));
    CHECK(apply_to_poly(WeylOp::x(), Poly::monomial(ExactRat(1), 4)) ==
          Poly::monomial(ExactRat(1), 5));
    CHECK_THROWS_AS(apply_to_poly(a, Poly::monomial(ExactRat(1), 1, Var::Lambda)),
                    std::invalid_argument);
}

TEST_CASE("rising XD products act on monomials by shifted factorials") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            Poly got = apply_to_poly(op_rising(0, n), Poly::monomial(ExactRat(1), m));
            CHECK(got == Poly::monomial(rising_factorial(ExactRat(m), n), m));
        }
}

TEST_CASE("rising XD products act on the exponential through the polynomial family") {
    CHECK(apply_to_exp(WeylOp::identity()) == Poly::constant(ExactRat(1)));
    CHECK(apply_to_exp(WeylOp::monomial(2, 3)) == Poly::monomial(ExactRat(1), 2));
    for (int n = 0; n <= 10; ++n)
        for (int r = 0; r <= 4; ++r)
            CHECK(apply_to_exp(op_rising(r, n)) == r_lah_bell_poly(n, r));
}

TEST_CASE("conjugation by powers of X shifts the rising product") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            for (int r = 0; r <= 3; ++r)
                for (int k = 1; k <= 4; ++k) CHECK(shift_identity_check(n, m, r, k).ok);
    CHECK_THROWS_AS(shift_identity_check(2, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("the k = 0 boundary case degenerates to the vandermonde sum") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            for (int r = 0; r <= 2; ++r) {
                WeylOp lhs = op_rising(r + m, n);
                WeylOp rhs;
                for (int l = 0; l <= n; ++l) {
                    ExactRat w = binomial(ExactRat(n), l) *
                                 rising_factorial(ExactRat(m), n - l);
                    rhs += op_rising(r, l) * w;
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("operator form of the spivey recurrence holds") {
    CHECK(operator_spivey_check(1, 1, 0).ok);
    for (int n = 0; n + 0 <= 8; ++n)
        for (int m = 0; n + m <= 8; ++m)
            for (int r = 0; r <= 3; ++r) CHECK(operator_spivey_check(n, m, r).ok);
}
