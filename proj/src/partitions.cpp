#include "qoa/partitions.hpp"

namespace qoa {

namespace {

void rec(long n, long max_part, long min_part, bool distinct, Partition& acc,
         std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (long p = std::min(n, max_part); p >= min_part; --p) {
        acc.push_back(p);
        rec(n - p, distinct ? p - 1 : p, min_part, distinct, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(long n, long min_part, bool distinct) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition acc;
    rec(n, n, min_part, distinct, acc, out);
    return out;
}

long colored_partition_count(long n, int k) {
    if (n < 0) return -1;
    // p_k generating function: one factor (1-q^m)^-1 per part size per color.
    std::vector<long> c(n + 1, 0);
    c[0] = 1;
    for (int color = 0; color < k; ++color)
        for (long m = 1; m <= n; ++m)
            for (long i = m; i <= n; ++i) c[i] += c[i - m];
    return c[n];
}

} // namespace qoa
