#include "lahbell/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lahbell {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

ExactRat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    ExactRat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const ExactRat& q) {
    return q.get_str();
}

bool is_integer(const ExactRat& q) {
    return q.get_den() == 1;
}

namespace {

std::mutex fact_mutex;
std::vector<ExactInt> fact_cache = {ExactInt(1)};  // fact_cache[i] = i!
std::size_t fact_limit = 512;

}  // namespace

ExactInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    {
        std::lock_guard<std::mutex> lock(fact_mutex);
        if (static_cast<std::size_t>(n) <= fact_limit) {
            while (fact_cache.size() <= static_cast<std::size_t>(n))
                fact_cache.push_back(fact_cache.back() * ExactInt(fact_cache.size()));
            return fact_cache[static_cast<std::size_t>(n)];
        }
    }
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

void set_factorial_cache_limit(std::size_t limit) {
    std::lock_guard<std::mutex> lock(fact_mutex);
    fact_limit = limit;
    if (fact_cache.size() > limit + 1) fact_cache.resize(limit + 1);
}

ExactRat binomial(const ExactRat& x, int k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    ExactRat out(1);
    for (int i = 0; i < k; ++i) out *= x - ExactRat(i);
    return out / ExactRat(factorial(k));
}

ExactInt binomial_int(long n, long k) {
    if (k < 0 || k > n) return ExactInt(0);
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

ExactRat rising_factorial(const ExactRat& x, int n) {
    ExactRat out(1);
    for (int i = 0; i < n; ++i) out *= x + ExactRat(i);
    return out;
}

ExactRat falling_factorial(const ExactRat& x, int n) {
    ExactRat out(1);
    for (int i = 0; i < n; ++i) out *= x - ExactRat(i);
    return out;
}

ExactRat rising_factorial_deg(const ExactRat& x, int n, const ExactRat& lambda) {
    ExactRat out(1);
    for (int i = 0; i < n; ++i) out *= x + ExactRat(i) * lambda;
    return out;
}

ExactRat falling_factorial_deg(const ExactRat& x, int n, const ExactRat& lambda) {
    ExactRat out(1);
    for (int i = 0; i < n; ++i) out *= x - ExactRat(i) * lambda;
    return out;
}

ExactRat degenerate_binomial(const ExactRat& x, int n, const ExactRat& lambda) {
    if (n < 0) throw std::invalid_argument("degenerate_binomial: negative n");
    return falling_factorial_deg(x, n, lambda) / ExactRat(factorial(n));
}

}  // namespace lahbell
