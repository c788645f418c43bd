#pragma once

#include <vector>

namespace qoa {

using Partition = std::vector<long>; // parts in decreasing order

/// All partitions of n with parts >= min_part, strictly decreasing parts when
/// distinct is set. Each partition is listed with parts descending, and the
/// list itself is in lexicographic-descending order ({5} before {4,1}).
/// n < 0 yields the empty list; n == 0 the empty partition.
std::vector<Partition> enumerate_partitions(long n, long min_part = 1, bool distinct = false);

/// Number of partitions of n into parts of k colors (p_k), by convolution.
/// Matches the coefficient of q^n in prod (1-q^m)^-k.
long colored_partition_count(long n, int k);

} // namespace qoa
