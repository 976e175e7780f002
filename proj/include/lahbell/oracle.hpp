#pragma once

#include <map>

#include "lahbell/exact.hpp"

namespace lahbell {

// Exhaustive enumeration over set partitions of [n], encoded as restricted
// growth strings. Linearly ordered blocks are counted by weighting each set
// partition with the product of |block|! over its blocks instead of
// materializing every ordering. n is capped (default 9, Bell(9) = 21147
// partitions) to keep exhaustive runs sub-second; calls above the cap throw.

int ordered_partition_cap();
void set_ordered_partition_cap(int cap);

// Partitions of [n] into exactly k nonempty linearly ordered blocks.
ExactInt count_ordered_partitions(int n, int k);

// Partitions of [n] into any number of nonempty linearly ordered blocks.
ExactInt count_all_ordered_partitions(int n);

// Full row k -> count; keys are the block counts that actually occur
// (k = 0 for n = 0, else k = 1..n).
std::map<int, ExactInt> distribution_by_block_count(int n);

// Plain set partitions of [n] into k blocks (ordering weight removed).
ExactInt count_set_partitions(int n, int k);

}  // namespace lahbell
