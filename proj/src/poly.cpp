#include "lahbell/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "lahbell/tables.hpp"

namespace lahbell {

char var_letter(Var v) {
    return v == Var::X ? 'x' : 'l';
}

namespace {

const ExactRat kZero(0);

void require_same_var(const Poly& a, const Poly& b) {
    if (!a.is_zero() && !b.is_zero() && a.degree() >= 1 && b.degree() >= 1 &&
        a.var() != b.var())
        throw std::invalid_argument("poly: mixing variables x and lambda");
}

}  // namespace

Poly Poly::constant(const ExactRat& c, Var v) {
    Poly p(v);
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

Poly Poly::monomial(const ExactRat& c, int degree, Var v) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    Poly p(v);
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, ExactRat(0));
        p.coeffs_.back() = c;
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<ExactRat> coeffs, Var v) {
    Poly p(v);
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const ExactRat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_var(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactRat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    if (is_zero() || degree() < 1) {
        // adopt o's tag when it carries more information
        if (o.degree() >= 1) var_ = o.var_;
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    return *this += -o;
}

Poly Poly::operator-() const {
    Poly p(var_);
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

Poly& Poly::operator*=(const Poly& o) {
    require_same_var(*this, o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    if (degree() < 1 && o.degree() >= 1) var_ = o.var_;
    std::vector<ExactRat> out(coeffs_.size() + o.coeffs_.size() - 1, ExactRat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const ExactRat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly& Poly::operator/=(const ExactRat& s) {
    if (s == 0) throw std::invalid_argument("Poly: division by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
}

bool Poly::operator==(const Poly& o) const {
    if (coeffs_ != o.coeffs_) return false;
    if (degree() >= 1 && var_ != o.var_) return false;
    return true;
}

ExactRat Poly::eval(const ExactRat& point) const {
    ExactRat out(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * point + *it;
    return out;
}

Poly Poly::times_power(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::times_power: negative power");
    if (is_zero()) return *this;
    Poly p(var_);
    p.coeffs_.assign(static_cast<std::size_t>(k), ExactRat(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const ExactRat& c = coeffs_[i];
        if (c == 0) continue;
        ExactRat mag = c < 0 ? ExactRat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << rational_str(mag);
        } else {
            if (mag != 1) os << rational_str(mag) << "*";
            os << var_letter(var_);
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(const ExactRat& c) {
    BiPoly p;
    if (c != 0) p.coeffs_.push_back(Poly::constant(c, Var::Lambda));
    return p;
}

BiPoly BiPoly::from_x_poly(const Poly& p) {
    BiPoly out;
    out.coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.coeffs_.push_back(Poly::constant(c, Var::Lambda));
    out.trim();
    return out;
}

BiPoly BiPoly::from_lambda_poly(const Poly& p) {
    BiPoly out;
    if (!p.is_zero()) out.coeffs_.push_back(p);
    return out;
}

BiPoly BiPoly::from_x_coeffs(std::vector<Poly> coeffs) {
    BiPoly out;
    out.coeffs_ = std::move(coeffs);
    out.trim();
    return out;
}

const Poly& BiPoly::coeff_x(int i) const {
    static const Poly zero(Var::Lambda);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Poly(Var::Lambda));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    return *this += -o;
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Poly> out(coeffs_.size() + o.coeffs_.size() - 1, Poly(Var::Lambda));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Poly& lambda_scalar) {
    for (auto& c : coeffs_) c *= lambda_scalar;
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const ExactRat& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

BiPoly BiPoly::times_xpower(int k) const {
    if (k < 0) throw std::invalid_argument("BiPoly::times_xpower: negative power");
    if (is_zero()) return *this;
    BiPoly p;
    p.coeffs_.assign(static_cast<std::size_t>(k), Poly(Var::Lambda));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

Poly BiPoly::at_lambda(const ExactRat& lambda) const {
    std::vector<ExactRat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(lambda));
    return Poly::from_coeffs(std::move(out), Var::X);
}

Poly BiPoly::at_x(const ExactRat& x) const {
    Poly out(Var::Lambda);
    ExactRat p(1);
    for (const auto& c : coeffs_) {
        out += c * p;
        p *= x;
    }
    return out;
}

ExactRat BiPoly::eval(const ExactRat& x, const ExactRat& lambda) const {
    return at_lambda(lambda).eval(x);
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Poly& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool is_const = c.degree() == 0;
        if (i == 0) {
            os << c.str();
        } else {
            if (is_const && c.coeff(0) == 1) {
                // bare power of x
            } else if (is_const) {
                os << c.str() << "*";
            } else {
                os << "(" << c.str() << ")*";
            }
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Factorial polynomials

Poly shifted_factorial_poly(int n, Direction d, const ExactRat& shift) {
    if (n < 0) throw std::invalid_argument("factorial_poly: negative n");
    Poly out = Poly::constant(ExactRat(1), Var::X);
    for (int i = 0; i < n; ++i) {
        ExactRat step = d == Direction::Rising ? ExactRat(i) : ExactRat(-i);
        Poly factor = Poly::from_coeffs({shift + step, ExactRat(1)}, Var::X);
        out *= factor;
    }
    return out;
}

Poly factorial_poly(int n, Direction d) {
    return shifted_factorial_poly(n, d, ExactRat(0));
}

BiPoly shifted_degenerate_factorial_poly(int n, Direction d, const ExactRat& shift) {
    if (n < 0) throw std::invalid_argument("degenerate_factorial_poly: negative n");
    BiPoly out = BiPoly::constant(ExactRat(1));
    for (int i = 0; i < n; ++i) {
        // factor x + shift +- i*lambda
        ExactRat step = d == Direction::Rising ? ExactRat(i) : ExactRat(-i);
        Poly c0 = Poly::from_coeffs({shift, step}, Var::Lambda);
        out *= BiPoly::from_x_coeffs({c0, Poly::constant(ExactRat(1), Var::Lambda)});
    }
    return out;
}

BiPoly degenerate_factorial_poly(int n, Direction d) {
    return shifted_degenerate_factorial_poly(n, d, ExactRat(0));
}

// ---------------------------------------------------------------------------
// Basis conversions

std::vector<ExactRat> falling_basis_coeffs(const Poly& p) {
    Poly rem = p;
    const int d = p.degree();
    std::vector<ExactRat> out(static_cast<std::size_t>(d < 0 ? 0 : d + 1), ExactRat(0));
    // (x)_k is monic of degree k, so peel from the top.
    for (int k = d; k >= 0; --k) {
        ExactRat c = rem.coeff(k);
        out[static_cast<std::size_t>(k)] = c;
        if (c != 0) rem -= factorial_poly(k, Direction::Falling) * c;
    }
    if (!rem.is_zero()) throw std::logic_error("falling_basis_coeffs: nonzero remainder");
    return out;
}

std::vector<Poly> degenerate_falling_basis_coeffs(const BiPoly& p) {
    BiPoly rem = p;
    const int d = p.degree_x();
    std::vector<Poly> out(static_cast<std::size_t>(d < 0 ? 0 : d + 1), Poly(Var::Lambda));
    for (int k = d; k >= 0; --k) {
        Poly c = rem.coeff_x(k);
        out[static_cast<std::size_t>(k)] = c;
        if (!c.is_zero()) rem -= degenerate_factorial_poly(k, Direction::Falling) * c;
    }
    if (!rem.is_zero())
        throw std::logic_error("degenerate_falling_basis_coeffs: nonzero remainder");
    return out;
}

// ---------------------------------------------------------------------------
// Bell-type polynomial families

Poly lah_bell_poly(int n) {
    if (n < 0) throw std::invalid_argument("lah_bell_poly: negative n");
    std::vector<ExactRat> coeffs(static_cast<std::size_t>(n) + 1, ExactRat(0));
    for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = ExactRat(lah(n, k));
    return Poly::from_coeffs(std::move(coeffs), Var::X);
}

Poly r_lah_bell_poly(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("r_lah_bell_poly: negative argument");
    std::vector<ExactRat> coeffs(static_cast<std::size_t>(n) + 1, ExactRat(0));
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(k)] = ExactRat(r_lah(n, k, r));
    return Poly::from_coeffs(std::move(coeffs), Var::X);
}

Poly lambda_r_lah(int n, int k, int r) {
    if (n < 0 || k < 0 || r < 0) throw std::invalid_argument("lambda_r_lah: negative argument");
    if (k > n) return Poly(Var::Lambda);
    // (r + lambda(n-1))_{n-k,lambda} = prod_{j=k}^{n-1} (r + j*lambda)
    Poly prod = Poly::constant(ExactRat(1), Var::Lambda);
    for (int j = k; j <= n - 1; ++j)
        prod *= Poly::from_coeffs({ExactRat(r), ExactRat(j)}, Var::Lambda);
    ExactRat scale = make_rat(factorial(n), factorial(k) * factorial(n - k));
    return prod * scale;
}

BiPoly lambda_r_lah_bell_poly(int n, int r) {
    if (n < 0 || r < 0)
        throw std::invalid_argument("lambda_r_lah_bell_poly: negative argument");
    std::vector<Poly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs.push_back(lambda_r_lah(n, k, r));
    return BiPoly::from_x_coeffs(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Spivey-type right-hand sides

Poly spivey_rhs(int n, int m, int r) {
    if (n < 0 || m < 0 || r < 0) throw std::invalid_argument("spivey_rhs: negative argument");
    Poly out(Var::X);
    for (int k = 0; k <= m; ++k) {
        ExactInt lmk = r_lah(m, k, r);
        if (lmk == 0) continue;
        for (int l = 0; l <= n; ++l) {
            ExactRat w = ExactRat(binomial_int(n, l)) * ExactRat(lmk) *
                         rising_factorial(ExactRat(m + k), n - l);
            if (w == 0) continue;
            out += (r_lah_bell_poly(l, r) * w).times_power(k);
        }
    }
    return out;
}

BiPoly spivey_rhs_lambda(int n, int m, int r) {
    if (n < 0 || m < 0 || r < 0)
        throw std::invalid_argument("spivey_rhs_lambda: negative argument");
    BiPoly out;
    for (int j = 0; j <= m; ++j) {
        Poly lmj = lambda_r_lah(m, j, r);
        if (lmj.is_zero()) continue;
        for (int k = 0; k <= n; ++k) {
            // <m+j>_{n-k} is the ordinary rising factorial; the lambda^{n-k}
            // factor is carried separately.
            ExactRat w = ExactRat(binomial_int(n, k)) *
                         rising_factorial(ExactRat(m + j), n - k);
            if (w == 0) continue;
            Poly lam_part = Poly::monomial(w, n - k, Var::Lambda) * lmj;
            out += (lambda_r_lah_bell_poly(k, r) * lam_part).times_xpower(j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks

CheckReport defining_relation_check(int n, int r, DefiningVariant variant) {
    if (n < 0 || r < 0)
        throw std::invalid_argument("defining_relation_check: negative argument");
    std::ostringstream fail;
    switch (variant) {
        case DefiningVariant::Classic: {
            auto coeffs = falling_basis_coeffs(factorial_poly(n, Direction::Rising));
            for (int k = 0; k <= n; ++k) {
                ExactRat expect = ExactRat(lah(n, k));
                ExactRat got = k < static_cast<int>(coeffs.size())
                                   ? coeffs[static_cast<std::size_t>(k)]
                                   : ExactRat(0);
                if (got != expect) {
                    fail << "classic n=" << n << " k=" << k << ": basis coeff "
                         << rational_str(got) << " != L(n,k) " << rational_str(expect);
                    return CheckReport::fail(fail.str());
                }
            }
            return CheckReport::pass();
        }
        case DefiningVariant::RShift: {
            auto coeffs = falling_basis_coeffs(
                shifted_factorial_poly(n, Direction::Rising, ExactRat(r)));
            for (int k = 0; k <= n; ++k) {
                ExactRat expect = ExactRat(r_lah(n, k, r));
                ExactRat got = k < static_cast<int>(coeffs.size())
                                   ? coeffs[static_cast<std::size_t>(k)]
                                   : ExactRat(0);
                if (got != expect) {
                    fail << "r_shift n=" << n << " r=" << r << " k=" << k
                         << ": basis coeff " << rational_str(got) << " != Lr(n,k) "
                         << rational_str(expect);
                    return CheckReport::fail(fail.str());
                }
            }
            return CheckReport::pass();
        }
        case DefiningVariant::Lambda: {
            auto coeffs = degenerate_falling_basis_coeffs(
                shifted_degenerate_factorial_poly(n, Direction::Rising, ExactRat(r)));
            for (int k = 0; k <= n; ++k) {
                Poly expect = lambda_r_lah(n, k, r);
                Poly got = k < static_cast<int>(coeffs.size())
                               ? coeffs[static_cast<std::size_t>(k)]
                               : Poly(Var::Lambda);
                if (!(got == expect)) {
                    fail << "lambda n=" << n << " r=" << r << " k=" << k
                         << ": basis coeff " << got.str() << " != Lr_lambda(n,k) "
                         << expect.str();
                    return CheckReport::fail(fail.str());
                }
            }
            return CheckReport::pass();
        }
    }
    return CheckReport::fail("defining_relation_check: unknown variant");
}

CheckReport vandermonde_check(int n) {
    if (n < 0) throw std::invalid_argument("vandermonde_check: negative n");
    // The lambda slot of BiPoly plays the role of y throughout.
    const Poly one_l = Poly::constant(ExactRat(1), Var::Lambda);

    // <x+y>_n = sum_k C(n,k) <x>_k <y>_{n-k}
    BiPoly lhs1 = BiPoly::constant(ExactRat(1));
    for (int i = 0; i < n; ++i) {
        Poly c0 = Poly::from_coeffs({ExactRat(i), ExactRat(1)}, Var::Lambda);  // y + i
        lhs1 *= BiPoly::from_x_coeffs({c0, one_l});
    }
    BiPoly rhs1;
    for (int k = 0; k <= n; ++k) {
        BiPoly xs = BiPoly::from_x_poly(factorial_poly(k, Direction::Rising));
        Poly ys = Poly(Var::Lambda);
        {
            Poly acc = Poly::constant(ExactRat(1), Var::Lambda);
            for (int i = 0; i < n - k; ++i)
                acc *= Poly::from_coeffs({ExactRat(i), ExactRat(1)}, Var::Lambda);
            ys = acc;
        }
        rhs1 += xs * ys * ExactRat(binomial_int(n, k));
    }
    if (!(lhs1 == rhs1)) {
        std::ostringstream os;
        os << "vandermonde n=" << n << ": <x+y>_n expansion mismatch: " << lhs1.str()
           << " != " << rhs1.str();
        return CheckReport::fail(os.str());
    }

    // C(x+y+n-1, n) = sum_k C(x+k-1, k) C(y+n-k-1, n-k), both sides in Q[x,y];
    // C(x+k-1, k) = <x>_k / k!.
    BiPoly lhs2 = lhs1 * make_rat(ExactInt(1), factorial(n));
    BiPoly rhs2;
    for (int k = 0; k <= n; ++k) {
        BiPoly xs = BiPoly::from_x_poly(factorial_poly(k, Direction::Rising) /
                                        ExactRat(factorial(k)));
        Poly acc = Poly::constant(ExactRat(1), Var::Lambda);
        for (int i = 0; i < n - k; ++i)
            acc *= Poly::from_coeffs({ExactRat(i), ExactRat(1)}, Var::Lambda);
        acc /= ExactRat(factorial(n - k));
        rhs2 += xs * acc;
    }
    if (!(lhs2 == rhs2)) {
        std::ostringstream os;
        os << "vandermonde n=" << n << ": binomial convolution mismatch";
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

}  // namespace lahbell
