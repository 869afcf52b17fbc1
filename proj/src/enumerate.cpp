#include "freeprob/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

namespace freeprob {

namespace {

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed < 0 || parsed > 64) return fallback;
    return static_cast<int>(parsed);
}

EnumerationCaps initial_caps() {
    EnumerationCaps caps;
    caps.partitions = env_cap("FREEPROB_CAP_PARTITIONS", caps.partitions);
    caps.noncrossing = env_cap("FREEPROB_CAP_NONCROSSING", caps.noncrossing);
    return caps;
}

} // namespace

EnumerationCaps& enumeration_caps() {
    static EnumerationCaps caps = initial_caps();
    return caps;
}

long long bell_number(int n) {
    if (n < 0) throw argument_error("bell_number: n must be nonnegative");
    if (n > 25) throw argument_error("bell_number: overflows past n = 25");
    std::vector<std::vector<long long>> tri(1, {1});
    for (int r = 1; r <= n; ++r) {
        std::vector<long long> row(static_cast<std::size_t>(r) + 1);
        row[0] = tri.back().back();
        for (int i = 1; i <= r; ++i)
            row[static_cast<std::size_t>(i)] =
                row[static_cast<std::size_t>(i - 1)] + tri.back()[static_cast<std::size_t>(i - 1)];
        tri.push_back(std::move(row));
    }
    return tri[static_cast<std::size_t>(n)][0];
}

namespace detail {

void check_partition_cap(int n) {
    const int cap = enumeration_caps().partitions;
    if (n > cap)
        throw resource_limit_error(
            "partition enumeration of n = " + std::to_string(n) + " exceeds the cap " +
            std::to_string(cap) + "; the visit count is Bell(n), already " +
            std::to_string(bell_number(std::min(n, 25))) + " at n = " + std::to_string(std::min(n, 25)));
}

void check_noncrossing_cap(int n) {
    const int cap = enumeration_caps().noncrossing;
    if (n > cap)
        throw resource_limit_error(
            "non-crossing enumeration of n = " + std::to_string(n) + " exceeds the cap " +
            std::to_string(cap) + "; the visit count is the Catalan number C(n)");
}

} // namespace detail

std::vector<SetPartition> enumerate_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> enumerate_noncrossing(int n) {
    std::vector<SetPartition> out;
    for_each_noncrossing(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> enumerate_nc_first_block(int k, int m) {
    std::vector<SetPartition> out;
    for_each_nc_first_block(k, m, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> enumerate_pairings(int n) {
    std::vector<SetPartition> out;
    for_each_pairing(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

namespace {

BlockProfile profile_of(const SetPartition& p) {
    BlockProfile prof;
    prof.reserve(p.blocks.size());
    for (const auto& b : p.blocks) prof.push_back(static_cast<int>(b.size()));
    std::sort(prof.begin(), prof.end(), std::greater<int>());
    return prof;
}

std::mutex cache_mutex;

} // namespace

const std::map<BlockProfile, long long>& nc_profile_histogram(int n) {
    static std::map<int, std::map<BlockProfile, long long>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::map<BlockProfile, long long> hist;
    for_each_noncrossing(n, [&](const SetPartition& p) { ++hist[profile_of(p)]; });
    return cache.emplace(n, std::move(hist)).first->second;
}

const std::map<BlockProfile, long long>& ncfb_profile_histogram(int k, int m) {
    static std::map<std::pair<int, int>, std::map<BlockProfile, long long>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({k, m});
    if (it != cache.end()) return it->second;
    std::map<BlockProfile, long long> hist;
    for_each_nc_first_block(k, m, [&](const SetPartition& p) { ++hist[profile_of(p)]; });
    return cache.emplace(std::make_pair(k, m), std::move(hist)).first->second;
}

const std::map<std::pair<int, BlockProfile>, long long>& partition_rc_histogram(int n) {
    static std::map<int, std::map<std::pair<int, BlockProfile>, long long>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::map<std::pair<int, BlockProfile>, long long> hist;
    for_each_partition(n, [&](const SetPartition& p) {
        ++hist[{restricted_crossings(p), profile_of(p)}];
    });
    return cache.emplace(n, std::move(hist)).first->second;
}

const std::map<int, long long>& pairing_rc_histogram(int n) {
    static std::map<int, std::map<int, long long>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::map<int, long long> hist;
    for_each_pairing(n, [&](const SetPartition& p) { ++hist[restricted_crossings(p)]; });
    return cache.emplace(n, std::move(hist)).first->second;
}

} // namespace freeprob
