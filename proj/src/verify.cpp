#include "lahbell/verify.hpp"

#include <algorithm>
#include <atomic>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "lahbell/oracle.hpp"
#include "lahbell/poly.hpp"
#include "lahbell/series.hpp"
#include "lahbell/tables.hpp"
#include "lahbell/weyl.hpp"

namespace lahbell {

namespace {

int pick(int override_v, int cap, int quick_v, bool quick) {
    int def = quick ? quick_v : cap;
    if (override_v < 0) return def;
    return std::min(override_v, cap);
}

std::string fmt(const char* head, std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream os;
    os << head;
    for (const auto& [k, v] : kv) os << " " << k << "=" << v;
    return os.str();
}

std::string istr(int v) { return std::to_string(v); }

CheckReport equal_or_fail(bool ok, const std::string& what) {
    return ok ? CheckReport::pass() : CheckReport::fail(what);
}

CheckReport check_lambda_reduction(int n, int r) {
    for (int k = 0; k <= n; ++k) {
        ExactRat got = lambda_r_lah(n, k, r).eval(ExactRat(1));
        ExactRat expect(r_lah(n, k, r));
        if (got != expect) {
            std::ostringstream os;
            os << "lambda=1 reduction n=" << n << " k=" << k << " r=" << r << ": "
               << rational_str(got) << " != " << rational_str(expect);
            return CheckReport::fail(os.str());
        }
    }
    return CheckReport::pass();
}

CheckReport check_spivey(int n, int m, int r) {
    Poly rhs = spivey_rhs(n, m, r);
    Poly lhs = r_lah_bell_poly(n + m, r);
    if (!(rhs == lhs)) {
        std::ostringstream os;
        os << "spivey n=" << n << " m=" << m << " r=" << r << ": " << rhs.str()
           << " != " << lhs.str();
        return CheckReport::fail(os.str());
    }
    // x = 1 corollary: the double sum at x = 1 equals the triangle row sum.
    ExactRat at_one = rhs.eval(ExactRat(1));
    ExactRat row_sum(0);
    for (int k = 0; k <= n + m; ++k) row_sum += ExactRat(r_lah(n + m, k, r));
    if (at_one != row_sum) {
        std::ostringstream os;
        os << "spivey corollary n=" << n << " m=" << m << " r=" << r << ": "
           << rational_str(at_one) << " != " << rational_str(row_sum);
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

CheckReport check_spivey_lambda(int n, int m, int r) {
    BiPoly rhs = spivey_rhs_lambda(n, m, r);
    BiPoly lhs = lambda_r_lah_bell_poly(n + m, r);
    if (!(rhs == lhs)) {
        std::ostringstream os;
        os << "spivey-lambda n=" << n << " m=" << m << " r=" << r << ": " << rhs.str()
           << " != " << lhs.str();
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

CheckReport check_weyl_exp_action(int n, int r) {
    Poly got = apply_to_exp(op_rising(ExactInt(r), n));
    Poly expect = r_lah_bell_poly(n, r);
    return equal_or_fail(got == expect,
                         fmt("weyl exp action", {{"n", istr(n)}, {"r", istr(r)}}) + ": " +
                             got.str() + " != " + expect.str());
}

CheckReport check_weyl_monomial_action(int n, int m) {
    Poly xm = Poly::monomial(ExactRat(1), m, Var::X);
    Poly got = apply_to_poly(op_rising(ExactInt(0), n), xm);
    Poly expect = xm * rising_factorial(ExactRat(m), n);
    return equal_or_fail(got == expect,
                         fmt("weyl monomial action", {{"n", istr(n)}, {"m", istr(m)}}) +
                             ": " + got.str() + " != " + expect.str());
}

CheckReport check_oracle_row(int n) {
    auto dist = distribution_by_block_count(n);
    for (int k = 0; k <= n; ++k) {
        ExactInt enumerated(0);
        if (auto it = dist.find(k); it != dist.end()) enumerated = it->second;
        ExactInt closed = lah(n, k);
        if (enumerated != closed) {
            std::ostringstream os;
            os << "oracle row n=" << n << " k=" << k << ": enumerated "
               << enumerated.get_str() << " != closed form " << closed.get_str();
            return CheckReport::fail(os.str());
        }
    }
    ExactInt total = count_all_ordered_partitions(n);
    ExactRat poly_val = lah_bell_poly(n).eval(ExactRat(1));
    if (ExactRat(total) != poly_val) {
        std::ostringstream os;
        os << "oracle row sum n=" << n << ": " << total.get_str() << " != "
           << rational_str(poly_val);
        return CheckReport::fail(os.str());
    }
    return CheckReport::pass();
}

CheckReport check_oracle_bell(int n) {
    ExactInt total(0);
    for (int k = 0; k <= n; ++k) {
        ExactInt enumerated = count_set_partitions(n, k);
        ExactInt closed = stirling2(n, k);
        if (enumerated != closed) {
            std::ostringstream os;
            os << "oracle set partitions n=" << n << " k=" << k << ": "
               << enumerated.get_str() << " != " << closed.get_str();
            return CheckReport::fail(os.str());
        }
        total += enumerated;
    }
    return equal_or_fail(total == bell(n),
                         fmt("oracle bell", {{"n", istr(n)}}) + ": " + total.get_str() +
                             " != " + bell(n).get_str());
}

void add_defining(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int n_hi = pick(b.n_max, 12, 6, b.quick);
    const int r_hi = pick(b.r_max, 4, 2, b.quick);
    for (int n = 0; n <= n_hi; ++n) {
        tasks.push_back({fmt("defining classic", {{"n", istr(n)}}),
                         [n] { return defining_relation_check(n, 0, DefiningVariant::Classic); }});
        for (int r = 0; r <= r_hi; ++r) {
            tasks.push_back({fmt("defining r-shift", {{"n", istr(n)}, {"r", istr(r)}}),
                             [n, r] { return defining_relation_check(n, r, DefiningVariant::RShift); }});
            tasks.push_back({fmt("defining lambda", {{"n", istr(n)}, {"r", istr(r)}}),
                             [n, r] { return defining_relation_check(n, r, DefiningVariant::Lambda); }});
        }
    }
    for (int n = 0; n <= n_hi; ++n)
        tasks.push_back({fmt("vandermonde", {{"n", istr(n)}}),
                         [n] { return vandermonde_check(n); }});
    {
        const int rec_n = pick(b.n_max, 20, 8, b.quick);
        const int rec_r = pick(b.r_max, 5, 2, b.quick);
        for (int r = 0; r <= rec_r; ++r)
            tasks.push_back({fmt("r-lah recurrence", {{"n_max", istr(std::max(rec_n, 1))}, {"r", istr(r)}}),
                             [rec_n, r] { return r_lah_recurrence_check(std::max(rec_n, 1), r); }});
    }
    {
        const int red_n = pick(b.n_max, 15, 6, b.quick);
        const int red_r = pick(b.r_max, 4, 2, b.quick);
        for (int n = 0; n <= red_n; ++n)
            for (int r = 0; r <= red_r; ++r)
                tasks.push_back({fmt("lambda reduction", {{"n", istr(n)}, {"r", istr(r)}}),
                                 [n, r] { return check_lambda_reduction(n, r); }});
    }
}

void add_spivey(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int cap = b.quick ? 7 : 12;
    const int n_hi = pick(b.n_max, cap, cap, b.quick);
    const int m_hi = pick(b.m_max, cap, cap, b.quick);
    for (int n = 0; n <= n_hi; ++n)
        for (int m = 0; m <= m_hi && n + m <= cap; ++m)
            tasks.push_back({fmt("spivey", {{"n", istr(n)}, {"m", istr(m)}}),
                             [n, m] { return check_spivey(n, m, 0); }});
    const int bell_cap = b.quick ? 8 : 14;
    for (int n = 0; n <= bell_cap; ++n)
        for (int m = 0; n + m <= bell_cap; ++m)
            tasks.push_back({fmt("spivey bell baseline", {{"n", istr(n)}, {"m", istr(m)}}),
                             [n, m] { return spivey_bell_check(n, m); }});
}

void add_spivey_r(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int cap = b.quick ? 6 : 10;
    const int n_hi = pick(b.n_max, cap, cap, b.quick);
    const int m_hi = pick(b.m_max, cap, cap, b.quick);
    const int r_hi = pick(b.r_max, 4, 2, b.quick);
    for (int n = 0; n <= n_hi; ++n)
        for (int m = 0; m <= m_hi && n + m <= cap; ++m)
            for (int r = 0; r <= r_hi; ++r)
                tasks.push_back({fmt("spivey-r", {{"n", istr(n)}, {"m", istr(m)}, {"r", istr(r)}}),
                                 [n, m, r] { return check_spivey(n, m, r); }});
}

void add_spivey_lambda(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int cap = b.quick ? 5 : 8;
    const int n_hi = pick(b.n_max, cap, cap, b.quick);
    const int m_hi = pick(b.m_max, cap, cap, b.quick);
    const int r_hi = pick(b.r_max, 3, 1, b.quick);
    for (int n = 0; n <= n_hi; ++n)
        for (int m = 0; m <= m_hi && n + m <= cap; ++m)
            for (int r = 0; r <= r_hi; ++r)
                tasks.push_back({fmt("spivey-lambda", {{"n", istr(n)}, {"m", istr(m)}, {"r", istr(r)}}),
                                 [n, m, r] { return check_spivey_lambda(n, m, r); }});
}

void add_weyl(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int n_hi = pick(b.n_max, 10, 6, b.quick);
    const int r_hi = pick(b.r_max, 4, 2, b.quick);
    for (int n = 0; n <= n_hi; ++n)
        for (int r = 0; r <= r_hi; ++r) {
            tasks.push_back({fmt("weyl expansion", {{"n", istr(n)}, {"r", istr(r)}}),
                             [n, r] { return expansion_check(n, r); }});
            tasks.push_back({fmt("weyl exp action", {{"n", istr(n)}, {"r", istr(r)}}),
                             [n, r] { return check_weyl_exp_action(n, r); }});
        }
    const int mono_hi = pick(b.n_max, 8, 4, b.quick);
    for (int n = 0; n <= mono_hi; ++n)
        for (int m = 0; m <= mono_hi; ++m)
            tasks.push_back({fmt("weyl monomial action", {{"n", istr(n)}, {"m", istr(m)}}),
                             [n, m] { return check_weyl_monomial_action(n, m); }});
    const int shift_nm = pick(b.n_max, 5, 3, b.quick);
    const int shift_r = pick(b.r_max, 3, 1, b.quick);
    const int shift_k = b.quick ? 2 : 4;
    for (int n = 0; n <= shift_nm; ++n)
        for (int m = 0; m <= shift_nm; ++m)
            for (int r = 0; r <= shift_r; ++r)
                for (int k = 1; k <= shift_k; ++k)
                    tasks.push_back({fmt("weyl shift", {{"n", istr(n)}, {"m", istr(m)}, {"r", istr(r)}, {"k", istr(k)}}),
                                     [n, m, r, k] { return shift_identity_check(n, m, r, k); }});
    const int sp_cap = b.quick ? 5 : 8;
    const int sp_r = pick(b.r_max, 3, 1, b.quick);
    for (int n = 0; n <= sp_cap; ++n)
        for (int m = 0; n + m <= sp_cap; ++m)
            for (int r = 0; r <= sp_r; ++r)
                tasks.push_back({fmt("weyl op-spivey", {{"n", istr(n)}, {"m", istr(m)}, {"r", istr(r)}}),
                                 [n, m, r] { return operator_spivey_check(n, m, r); }});
}

void add_gf(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int order = pick(b.order, 12, 8, b.quick);
    const int r_hi = pick(b.r_max, 3, 1, b.quick);
    for (int k = 0; k <= order; ++k)
        for (int r = 0; r <= r_hi; ++r)
            tasks.push_back({fmt("gf lah", {{"k", istr(k)}, {"r", istr(r)}, {"order", istr(order)}}),
                             [k, r, order] { return gf_check_lah(k, r, order); }});

    const int bell_order = pick(b.order, 10, 6, b.quick);
    const std::vector<ExactRat> xs{ExactRat(0), ExactRat(1), ExactRat(2), make_rat(1, 2)};
    for (int r = 0; r <= r_hi; ++r)
        for (const auto& x : xs)
            tasks.push_back({fmt("gf bell", {{"r", istr(r)}, {"x", rational_str(x)}, {"order", istr(bell_order)}}),
                             [r, x, bell_order] { return gf_check_bell(r, bell_order, x); }});

    const int l_order = pick(b.order, 8, 5, b.quick);
    const std::vector<ExactRat> lambdas{ExactRat(1), ExactRat(-1), make_rat(1, 2), ExactRat(2),
                                        make_rat(1, 3)};
    const int k_hi = b.quick ? 3 : 5;
    for (int r = 0; r <= r_hi; ++r)
        for (const auto& l : lambdas) {
            for (int k = 0; k <= k_hi; ++k)
                tasks.push_back({fmt("gf lambda number", {{"r", istr(r)}, {"lambda", rational_str(l)}, {"k", istr(k)}, {"order", istr(l_order)}}),
                                 [r, l, k, l_order] { return gf_check_lambda_number(r, l, k, l_order); }});
            for (const auto& x : std::vector<ExactRat>{ExactRat(0), ExactRat(1), make_rat(1, 2)})
                tasks.push_back({fmt("gf lambda poly", {{"r", istr(r)}, {"lambda", rational_str(l)}, {"x", rational_str(x)}, {"order", istr(l_order)}}),
                                 [r, l, x, l_order] { return gf_check_lambda_poly(r, l, x, l_order); }});
        }

    const int tv_nm = b.quick ? 1 : 2;
    const int tv_r = b.quick ? 1 : 2;
    const std::vector<ExactRat> tv_lambdas = b.quick
        ? std::vector<ExactRat>{ExactRat(1), ExactRat(2)}
        : std::vector<ExactRat>{ExactRat(1), make_rat(1, 2), ExactRat(2)};
    const std::vector<ExactRat> tv_ts = b.quick
        ? std::vector<ExactRat>{ExactRat(1)}
        : std::vector<ExactRat>{ExactRat(1), make_rat(1, 2)};
    for (int n = 0; n <= tv_nm; ++n)
        for (int m = 0; m <= tv_nm; ++m)
            for (int r = 0; r <= tv_r; ++r)
                for (const auto& l : tv_lambdas)
                    for (const auto& t : tv_ts)
                        tasks.push_back({fmt("gf two-variable", {{"n", istr(n)}, {"m", istr(m)}, {"r", istr(r)}, {"lambda", rational_str(l)}, {"t", rational_str(t)}}),
                                         [n, m, r, l, t] { return two_variable_spivey_spot_check(n, m, r, l, t); }});
}

void add_oracle(std::vector<CheckTask>& tasks, const SuiteBounds& b) {
    const int n_hi = std::min(pick(b.n_max, 9, 6, b.quick), ordered_partition_cap());
    for (int n = 0; n <= n_hi; ++n)
        tasks.push_back({fmt("oracle lah row", {{"n", istr(n)}}),
                         [n] { return check_oracle_row(n); }});
    const int bell_hi = std::min(pick(b.n_max, 8, 5, b.quick), ordered_partition_cap());
    for (int n = 0; n <= bell_hi; ++n)
        tasks.push_back({fmt("oracle bell", {{"n", istr(n)}}),
                         [n] { return check_oracle_bell(n); }});
}

}  // namespace

std::vector<CheckTask> build_suite(const std::string& suite, const SuiteBounds& bounds) {
    std::vector<CheckTask> tasks;
    if (suite == "defining") add_defining(tasks, bounds);
    else if (suite == "spivey") add_spivey(tasks, bounds);
    else if (suite == "spivey-r") add_spivey_r(tasks, bounds);
    else if (suite == "spivey-lambda") add_spivey_lambda(tasks, bounds);
    else if (suite == "weyl") add_weyl(tasks, bounds);
    else if (suite == "gf") add_gf(tasks, bounds);
    else if (suite == "oracle") add_oracle(tasks, bounds);
    else if (suite == "all") {
        add_defining(tasks, bounds);
        add_spivey(tasks, bounds);
        add_spivey_r(tasks, bounds);
        add_spivey_lambda(tasks, bounds);
        add_weyl(tasks, bounds);
        add_gf(tasks, bounds);
        add_oracle(tasks, bounds);
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return tasks;
}

std::vector<CheckResult> run_tasks(const std::vector<CheckTask>& tasks, int jobs) {
    if (jobs < 1) throw std::invalid_argument("run_tasks: jobs must be >= 1");
    std::vector<CheckResult> results(tasks.size());
    auto run_one = [&](std::size_t i) {
        results[i].name = tasks[i].name;
        try {
            CheckReport rep = tasks[i].run();
            results[i].ok = rep.ok;
            results[i].detail = rep.detail;
        } catch (const std::exception& e) {
            results[i].ok = false;
            results[i].detail = std::string("exception: ") + e.what();
        }
    };
    if (jobs == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            run_one(i);
        }
    };
    std::vector<std::thread> pool;
    const int width = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<std::size_t>(width));
    for (int w = 0; w < width; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace lahbell
