// Test-side oracles, kept independent of the library code paths they check:
// census recurrences, literal partition sums, and the predecessor-quadruple
// crossing count.
#pragma once

#include <vector>

#include "freeprob/cumulants.hpp"
#include "freeprob/enumerate.hpp"
#include "freeprob/partition.hpp"

namespace oracles {

using freeprob::CumulantSequence;
using freeprob::Rational;
using freeprob::SetPartition;

// Bell triangle recurrence.
inline long long bell(int n) {
    std::vector<std::vector<long long>> tri{{1}};
    for (int r = 1; r <= n; ++r) {
        std::vector<long long> row{tri.back().back()};
        for (int i = 1; i <= r; ++i)
            row.push_back(row[static_cast<std::size_t>(i - 1)] +
                          tri.back()[static_cast<std::size_t>(i - 1)]);
        tri.push_back(std::move(row));
    }
    return tri[static_cast<std::size_t>(n)][0];
}

// Catalan via the convolution recurrence C_{n+1} = sum C_i C_{n-i}.
inline long long catalan(int n) {
    std::vector<long long> c{1};
    for (int m = 0; m < n; ++m) {
        long long next = 0;
        for (int i = 0; i <= m; ++i)
            next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
        c.push_back(next);
    }
    return c[static_cast<std::size_t>(n)];
}

inline long long double_factorial_odd(int n) { // (2n-1)!!
    long long v = 1;
    for (int k = 1; k <= 2 * n - 1; k += 2) v *= k;
    return v;
}

// Literal predecessor-quadruple count: pairs of elements i, j from different
// blocks with p(i) < p(j) < i < j, p(.) the within-block predecessor.
inline int restricted_crossings_quadruple(const SetPartition& p) {
    std::vector<int> pred(static_cast<std::size_t>(p.n) + 1, 0); // 0 = none
    std::vector<int> block(static_cast<std::size_t>(p.n) + 1, -1);
    for (int b = 0; b < p.block_count(); ++b) {
        const auto& blk = p.blocks[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < blk.size(); ++i) {
            block[static_cast<std::size_t>(blk[i])] = b;
            if (i > 0) pred[static_cast<std::size_t>(blk[i])] = blk[i - 1];
        }
    }
    int count = 0;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]) continue;
            const int pi = pred[static_cast<std::size_t>(i)];
            const int pj = pred[static_cast<std::size_t>(j)];
            if (pi == 0 || pj == 0) continue;
            if (pi < pj && pj < i && i < j) ++count;
        }
    return count;
}

// Literal non-crossing moment sum, no histogram shortcut.
inline Rational nc_moment_sum(const CumulantSequence& R, int n) {
    Rational total(0);
    freeprob::for_each_noncrossing(n, [&](const SetPartition& p) {
        Rational prod(1);
        for (const auto& blk : p.blocks) prod *= R.at(static_cast<int>(blk.size()));
        total += prod;
    });
    return total;
}

// Literal q-weighted all-partition sum using the quadruple crossing count.
inline Rational q_partition_moment_sum(const CumulantSequence& R, int n, const Rational& q) {
    Rational total(0);
    freeprob::for_each_partition(n, [&](const SetPartition& p) {
        Rational prod(1);
        for (const auto& blk : p.blocks) prod *= R.at(static_cast<int>(blk.size()));
        total += prod * freeprob::rational_pow(q, restricted_crossings_quadruple(p));
    });
    return total;
}

} // namespace oracles
