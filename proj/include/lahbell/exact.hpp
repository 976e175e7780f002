#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace lahbell {

// All number-theoretic values in this library are exact. ExactInt is an
// arbitrary-precision signed integer, ExactRat a fully reduced fraction
// with positive denominator; both invariants are maintained by GMP as
// long as values are built through the helpers below.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

// num/den with canonicalization (mpq_class(a, b) alone does not reduce).
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

// Parses "p", "-p" or "p/q" (q > 0 after reduction). Throws
// std::invalid_argument on malformed input or zero denominator.
ExactRat parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const ExactRat& q);

bool is_integer(const ExactRat& q);

// n!; values up to the cache limit (default 512) are memoized.
ExactInt factorial(int n);
void set_factorial_cache_limit(std::size_t limit);

// Generalized binomial x(x-1)...(x-k+1)/k! for rational x, k >= 0.
ExactRat binomial(const ExactRat& x, int k);

// Integer C(n, k); zero when k < 0 or k > n.
ExactInt binomial_int(long n, long k);

// <x>_n = x(x+1)...(x+n-1) and (x)_n = x(x-1)...(x-n+1) at a rational
// point; the degenerate versions step by lambda instead of 1.
ExactRat rising_factorial(const ExactRat& x, int n);
ExactRat falling_factorial(const ExactRat& x, int n);
ExactRat rising_factorial_deg(const ExactRat& x, int n, const ExactRat& lambda);
ExactRat falling_factorial_deg(const ExactRat& x, int n, const ExactRat& lambda);

// Degenerate binomial coefficient (x)_{n,lambda} / n!.
ExactRat degenerate_binomial(const ExactRat& x, int n, const ExactRat& lambda);

}  // namespace lahbell
