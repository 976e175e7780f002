#include "lahbell/tables.hpp"

#include <sstream>
#include <stdexcept>

namespace lahbell {

namespace {

struct LahCorruption {
    int n = -1;
    int k = -1;
    ExactInt delta;
};

LahCorruption g_lah_corruption;

void require_nonneg(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

ExactInt ipow(const ExactInt& base, int e) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;  // 0^0 = 1 under mpz_pow_ui, as required here
}

}  // namespace

const ExactInt& Triangle::entry(int n, int k) const {
    static const ExactInt zero(0);
    if (n < 0 || n >= static_cast<int>(rows.size())) throw std::out_of_range("Triangle::entry");
    if (k < 0 || k > n) return zero;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Triangle make_triangle(TriangleKind kind, int n_max, int r) {
    require_nonneg(n_max, "make_triangle");
    require_nonneg(r, "make_triangle");
    Triangle t;
    t.kind = kind;
    t.r = kind == TriangleKind::RLah ? r : 0;
    t.rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<ExactInt> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            switch (kind) {
                case TriangleKind::Lah: row.push_back(lah(n, k)); break;
                case TriangleKind::RLah: row.push_back(r_lah(n, k, r)); break;
                case TriangleKind::Stirling2: row.push_back(stirling2(n, k)); break;
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

ExactInt lah(int n, int k) {
    require_nonneg(n, "lah");
    require_nonneg(k, "lah");
    ExactInt value;
    if (n == 0 && k == 0) {
        value = 1;
    } else if (k > n || k == 0) {
        value = 0;
    } else {
        value = factorial(n) / factorial(k) * binomial_int(n - 1, k - 1);
    }
    if (g_lah_corruption.n == n && g_lah_corruption.k == k) value += g_lah_corruption.delta;
    return value;
}

ExactInt r_lah(int n, int k, int r) {
    require_nonneg(n, "r_lah");
    require_nonneg(k, "r_lah");
    require_nonneg(r, "r_lah");
    if (n == 0 && k == 0) return 1;
    if (k > n) return 0;
    // binomial_int is 0 for k + r - 1 < 0, which covers the k = 0, r = 0 column.
    return factorial(n) / factorial(k) * binomial_int(n + r - 1, k + r - 1);
}

CheckReport r_lah_recurrence_check(int n_max, int r) {
    if (n_max < 1) throw std::invalid_argument("r_lah_recurrence_check: n_max must be >= 1");
    require_nonneg(r, "r_lah_recurrence_check");
    for (int n = 0; n + 1 <= n_max; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            ExactInt lhs = r_lah(n + 1, k, r);
            ExactInt rhs = (k >= 1 ? r_lah(n, k - 1, r) : ExactInt(0)) +
                           ExactInt(n + k + r) * r_lah(n, k, r);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "r_lah recurrence n=" << n << " k=" << k << " r=" << r << ": "
                   << lhs.get_str() << " != " << rhs.get_str();
                return CheckReport::fail(os.str());
            }
        }
    }
    return CheckReport::pass();
}

ExactInt stirling2(int n, int k) {
    require_nonneg(n, "stirling2");
    require_nonneg(k, "stirling2");
    if (k > n) return 0;
    std::vector<ExactInt> row{ExactInt(1)};  // row 0
    for (int m = 1; m <= n; ++m) {
        std::vector<ExactInt> next(static_cast<std::size_t>(m) + 1, ExactInt(0));
        for (int j = 1; j <= m; ++j) {
            next[static_cast<std::size_t>(j)] =
                ExactInt(j) * (j < m ? row[static_cast<std::size_t>(j)] : ExactInt(0)) +
                row[static_cast<std::size_t>(j - 1)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

ExactInt bell(int n) {
    require_nonneg(n, "bell");
    ExactInt out(0);
    for (int k = 0; k <= n; ++k) out += stirling2(n, k);
    return out;
}

CheckReport spivey_bell_check(int n, int m) {
    require_nonneg(n, "spivey_bell_check");
    require_nonneg(m, "spivey_bell_check");
    ExactInt lhs = bell(n + m);
    ExactInt rhs(0);
    for (int j = 0; j <= m; ++j) {
        ExactInt s = stirling2(m, j);
        if (s == 0) continue;
        for (int k = 0; k <= n; ++k)
            rhs += binomial_int(n, k) * s * ipow(ExactInt(j), n - k) * bell(k);
    }
    if (lhs != rhs) {
        std::ostringstream os;
        os << "spivey_bell n=" << n << " m=" << m << ": " << lhs.get_str()
           << " != " << rhs.get_str();
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

void corrupt_lah_entry_for_testing(int n, int k, const ExactInt& delta) {
    if (delta == 0) {
        g_lah_corruption = LahCorruption{};
    } else {
        g_lah_corruption = LahCorruption{n, k, delta};
    }
}

}  // namespace lahbell
