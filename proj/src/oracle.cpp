#include "lahbell/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lahbell {

namespace {

int g_cap = 9;

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("oracle: negative n");
    if (n > g_cap)
        throw std::invalid_argument("oracle: n exceeds enumeration cap (" +
                                    std::to_string(g_cap) + ")");
}

// Walks every restricted growth string over [n] and reports each set
// partition as its multiset of block sizes via `sizes` (length = #blocks).
template <typename Visit>
void for_each_partition(int n, Visit&& visit) {
    std::vector<int> sizes;
    if (n == 0) {
        visit(sizes);
        return;
    }
    sizes.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            visit(sizes);
            return;
        }
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            ++sizes[b];
            self(self, pos + 1);
            --sizes[b];
        }
        sizes.push_back(1);
        self(self, pos + 1);
        sizes.pop_back();
    };
    rec(rec, 0);
}

ExactInt ordering_weight(const std::vector<int>& sizes) {
    ExactInt w(1);
    for (int s : sizes) w *= factorial(s);
    return w;
}

}  // namespace

int ordered_partition_cap() { return g_cap; }

void set_ordered_partition_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("oracle: negative cap");
    g_cap = cap;
}

ExactInt count_ordered_partitions(int n, int k) {
    check_n(n);
    if (k < 0) throw std::invalid_argument("oracle: negative k");
    ExactInt total(0);
    for_each_partition(n, [&](const std::vector<int>& sizes) {
        if (static_cast<int>(sizes.size()) == k) total += ordering_weight(sizes);
    });
    return total;
}

ExactInt count_all_ordered_partitions(int n) {
    check_n(n);
    ExactInt total(0);
    for_each_partition(n, [&](const std::vector<int>& sizes) {
        total += ordering_weight(sizes);
    });
    return total;
}

std::map<int, ExactInt> distribution_by_block_count(int n) {
    check_n(n);
    std::map<int, ExactInt> out;
    for_each_partition(n, [&](const std::vector<int>& sizes) {
        out[static_cast<int>(sizes.size())] += ordering_weight(sizes);
    });
    return out;
}

ExactInt count_set_partitions(int n, int k) {
    check_n(n);
    if (k < 0) throw std::invalid_argument("oracle: negative k");
    ExactInt total(0);
    for_each_partition(n, [&](const std::vector<int>& sizes) {
        if (static_cast<int>(sizes.size()) == k) total += 1;
    });
    return total;
}

}  // namespace lahbell
