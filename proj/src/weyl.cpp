#include "lahbell/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lahbell/tables.hpp"

namespace lahbell {

WeylOp WeylOp::identity() { return monomial(0, 0); }

WeylOp WeylOp::monomial(int i, int j, const ExactRat& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("WeylOp::monomial: negative power");
    WeylOp op;
    op.add_term(i, j, c);
    return op;
}

WeylOp WeylOp::x() { return monomial(1, 0); }

WeylOp WeylOp::d() { return monomial(0, 1); }

void WeylOp::add_term(int i, int j, const ExactRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

WeylOp& WeylOp::operator*=(const ExactRat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
}

WeylOp WeylOp::operator-() const {
    WeylOp out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

std::string WeylOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        ExactRat mag = c < 0 ? ExactRat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        auto [i, j] = key;
        if (i == 0 && j == 0) {
            os << rational_str(mag);
        } else {
            if (mag != 1) os << rational_str(mag) << "*";
            if (i > 0) {
                os << "X";
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                os << "D";
                if (j > 1) os << "^" << j;
            }
        }
    }
    return os.str();
}

WeylOp normal_mul(const WeylOp& a, const WeylOp& b) {
    WeylOp out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const int i1 = ka.first, j1 = ka.second;
            const int i2 = kb.first, j2 = kb.second;
            const ExactRat c = ca * cb;
            const int smax = std::min(j1, i2);
            for (int s = 0; s <= smax; ++s) {
                ExactRat w = c * ExactRat(factorial(s) * binomial_int(i2, s) *
                                          binomial_int(j1, s));
                out.add_term(i1 + i2 - s, j1 + j2 - s, w);
            }
        }
    }
    return out;
}

WeylOp op_rising(const ExactInt& c, int n) {
    if (n < 0) throw std::invalid_argument("op_rising: negative n");
    if (c < 0) throw std::invalid_argument("op_rising: negative shift");
    WeylOp out = WeylOp::identity();
    for (int i = 0; i < n; ++i) {
        WeylOp factor = WeylOp::monomial(1, 1);
        factor += WeylOp::monomial(0, 0, ExactRat(c + i));
        out = normal_mul(out, factor);
    }
    return out;
}

CheckReport expansion_check(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("expansion_check: negative argument");
    WeylOp got = op_rising(ExactInt(r), n);
    WeylOp expect;
    for (int k = 0; k <= n; ++k)
        expect += WeylOp::monomial(k, k, ExactRat(r_lah(n, k, r)));
    if (!(got == expect)) {
        std::ostringstream os;
        os << "expansion n=" << n << " r=" << r << ": " << got.str()
           << " != " << expect.str();
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

Poly apply_to_poly(const WeylOp& op, const Poly& p) {
    if (p.degree() >= 1 && p.var() != Var::X)
        throw std::invalid_argument("apply_to_poly: polynomial must be in x");
    Poly out(Var::X);
    for (const auto& [key, c] : op.terms()) {
        auto [i, j] = key;
        for (int m = 0; m <= p.degree(); ++m) {
            const ExactRat& pm = p.coeff(m);
            if (pm == 0 || j > m) continue;
            ExactRat w = c * pm * falling_factorial(ExactRat(m), j);
            out += Poly::monomial(w, m - j + i, Var::X);
        }
    }
    return out;
}

Poly apply_to_exp(const WeylOp& op) {
    Poly out(Var::X);
    for (const auto& [key, c] : op.terms()) out += Poly::monomial(c, key.first, Var::X);
    return out;
}

CheckReport shift_identity_check(int n, int m, int r, int k) {
    if (n < 0 || m < 0 || r < 0)
        throw std::invalid_argument("shift_identity_check: negative argument");
    if (k < 1) throw std::invalid_argument("shift_identity_check: k must be >= 1");
    WeylOp xk = WeylOp::monomial(k, 0);
    WeylOp lhs = normal_mul(op_rising(ExactInt(m + r), n), xk);
    WeylOp sum;
    for (int l = 0; l <= n; ++l) {
        ExactRat w = ExactRat(binomial_int(n, l)) *
                     rising_factorial(ExactRat(m + k), n - l);
        sum += op_rising(ExactInt(r), l) * w;
    }
    WeylOp rhs = normal_mul(xk, sum);
    if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "shift n=" << n << " m=" << m << " r=" << r << " k=" << k << ": "
           << lhs.str() << " != " << rhs.str();
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

CheckReport operator_spivey_check(int n, int m, int r) {
    if (n < 0 || m < 0 || r < 0)
        throw std::invalid_argument("operator_spivey_check: negative argument");
    WeylOp lhs = op_rising(ExactInt(r), n + m);

    WeylOp rhs;
    for (int k = 0; k <= m; ++k) {
        ExactInt lmk = r_lah(m, k, r);
        if (lmk == 0) continue;
        for (int l = 0; l <= n; ++l) {
            ExactRat w = ExactRat(binomial_int(n, l) * lmk) *
                         rising_factorial(ExactRat(m + k), n - l);
            if (w == 0) continue;
            WeylOp term = normal_mul(WeylOp::monomial(k, 0),
                                     normal_mul(op_rising(ExactInt(r), l),
                                                WeylOp::monomial(0, k)));
            rhs += term * w;
        }
    }
    if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "operator spivey n=" << n << " m=" << m << " r=" << r << ": "
           << lhs.str() << " != " << rhs.str();
        return CheckReport::fail(os.str());
    }

    WeylOp f1 = normal_mul(op_rising(ExactInt(r), m), op_rising(ExactInt(r + m), n));
    WeylOp f2 = normal_mul(op_rising(ExactInt(r + m), n), op_rising(ExactInt(r), m));
    if (!(lhs == f1) || !(lhs == f2)) {
        std::ostringstream os;
        os << "operator factorization n=" << n << " m=" << m << " r=" << r << ": "
           << lhs.str() << " vs " << f1.str() << " vs " << f2.str();
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

}  // namespace lahbell
