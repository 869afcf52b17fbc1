#pragma once

#include <map>
#include <utility>
#include <vector>

#include "freeprob/errors.hpp"
#include "freeprob/partition.hpp"

namespace freeprob {

/// Enumeration size limits. Bell(n) grows super-exponentially — Bell(12) is
/// already ~4.2e6 and Bell(13) ~2.8e7 — so all-partition work is capped lower
/// than the Catalan-sized non-crossing work (Catalan(14) ~2.7e6).
/// Overridable programmatically or via the environment variables
/// FREEPROB_CAP_PARTITIONS and FREEPROB_CAP_NONCROSSING (read once at startup).
struct EnumerationCaps {
    int partitions = 12;  // all set partitions, pairings included
    int noncrossing = 14; // non-crossing families
};

EnumerationCaps& enumeration_caps();

/// Bell numbers via the Bell triangle; used for cap diagnostics and counts.
/// (The test suite carries its own independent copy.)
long long bell_number(int n);

namespace detail {

// Recursive "place the next element into each existing block, then a new
// block" generator. Visitors receive a scratch SetPartition that is reused
// between calls; copy it if it must outlive the visit.
template <class F>
void partition_rec(int n, int next, SetPartition& scratch, F&& visit) {
    if (next > n) {
        visit(const_cast<const SetPartition&>(scratch));
        return;
    }
    // index loop: the recursion appends/removes blocks, invalidating iterators
    for (std::size_t i = 0; i < scratch.blocks.size(); ++i) {
        scratch.blocks[i].push_back(next);
        partition_rec(n, next + 1, scratch, visit);
        scratch.blocks[i].pop_back();
    }
    scratch.blocks.emplace_back(1, next);
    partition_rec(n, next + 1, scratch, visit);
    scratch.blocks.pop_back();
}

// A block is joinable by the next (largest) element iff no other block's span
// strictly contains its maximum; anything else would create a crossing.
inline bool nc_joinable(const std::vector<std::vector<int>>& blocks, std::size_t candidate) {
    const int top = blocks[candidate].back();
    for (std::size_t c = 0; c < blocks.size(); ++c) {
        if (c == candidate) continue;
        if (blocks[c].front() < top && top < blocks[c].back()) return false;
    }
    return true;
}

template <class F>
void noncrossing_rec(int n, int next, SetPartition& scratch, F&& visit) {
    if (next > n) {
        visit(const_cast<const SetPartition&>(scratch));
        return;
    }
    for (std::size_t i = 0; i < scratch.blocks.size(); ++i) {
        if (!nc_joinable(scratch.blocks, i)) continue;
        scratch.blocks[i].push_back(next);
        noncrossing_rec(n, next + 1, scratch, visit);
        scratch.blocks[i].pop_back();
    }
    scratch.blocks.emplace_back(1, next);
    noncrossing_rec(n, next + 1, scratch, visit);
    scratch.blocks.pop_back();
}

template <class F>
void pairing_rec(std::vector<int>& unpaired, SetPartition& scratch, F&& visit) {
    if (unpaired.empty()) {
        visit(const_cast<const SetPartition&>(scratch));
        return;
    }
    const int first = unpaired.front();
    std::vector<int> rest(unpaired.begin() + 1, unpaired.end());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::vector<int> next;
        next.reserve(rest.size() - 1);
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
        scratch.blocks.push_back({first, rest[i]});
        pairing_rec(next, scratch, visit);
        scratch.blocks.pop_back();
    }
}

void check_partition_cap(int n);
void check_noncrossing_cap(int n);

} // namespace detail

/// All set partitions of {1..n}, canonical, deterministic order.
/// Pre: 1 <= n <= caps.partitions.
template <class F>
void for_each_partition(int n, F&& visit) {
    if (n < 1) throw argument_error("for_each_partition: n must be positive");
    detail::check_partition_cap(n);
    SetPartition scratch{n, {}};
    detail::partition_rec(n, 1, scratch, visit);
}

/// All non-crossing partitions of {1..n}; n = 0 yields the single empty
/// partition. Pre: 0 <= n <= caps.noncrossing.
template <class F>
void for_each_noncrossing(int n, F&& visit) {
    if (n < 0) throw argument_error("for_each_noncrossing: n must be nonnegative");
    detail::check_noncrossing_cap(n);
    SetPartition scratch{n, {}};
    detail::noncrossing_rec(n, 1, scratch, visit);
}

/// Non-crossing partitions of {1..m} whose block containing 1 contains {1..k}.
/// Pre: m >= k >= 1, m <= caps.noncrossing.
template <class F>
void for_each_nc_first_block(int k, int m, F&& visit) {
    if (k < 1) throw argument_error("for_each_nc_first_block: k must be positive");
    if (m < k) throw argument_error("for_each_nc_first_block: requires m >= k");
    detail::check_noncrossing_cap(m);
    SetPartition scratch{m, {}};
    scratch.blocks.emplace_back();
    for (int x = 1; x <= k; ++x) scratch.blocks[0].push_back(x);
    detail::noncrossing_rec(m, k + 1, scratch, visit);
}

/// All pair partitions of {1..n}; empty when n is odd.
/// Pre: 1 <= n <= caps.partitions.
template <class F>
void for_each_pairing(int n, F&& visit) {
    if (n < 1) throw argument_error("for_each_pairing: n must be positive");
    detail::check_partition_cap(n);
    if (n % 2 != 0) return;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    SetPartition scratch{n, {}};
    detail::pairing_rec(all, scratch, visit);
}

std::vector<SetPartition> enumerate_partitions(int n);
std::vector<SetPartition> enumerate_noncrossing(int n);
std::vector<SetPartition> enumerate_nc_first_block(int k, int m);
std::vector<SetPartition> enumerate_pairings(int n);

/// Block-size profile, sorted descending; the key for single-variable
/// partition sums (a product over blocks only sees block sizes).
using BlockProfile = std::vector<int>;

/// Non-crossing partitions of {1..n} grouped by block-size profile.
/// Built once per n by direct enumeration and cached (thread-safe).
const std::map<BlockProfile, long long>& nc_profile_histogram(int n);

/// Same for NC^k(m).
const std::map<BlockProfile, long long>& ncfb_profile_histogram(int k, int m);

/// All partitions of {1..n} grouped by (restricted crossing number, profile).
const std::map<std::pair<int, BlockProfile>, long long>& partition_rc_histogram(int n);

/// Pair partitions of {1..n} grouped by restricted crossing number.
const std::map<int, long long>& pairing_rc_histogram(int n);

} // namespace freeprob
