#include <doctest.h>

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "freeprob/enumerate.hpp"
#include "freeprob/partition.hpp"
#include "oracles.hpp"

using namespace freeprob;

namespace {

SetPartition make(int n, std::vector<std::vector<int>> blocks) {
    return SetPartition::from_blocks(n, std::move(blocks));
}

} // namespace

TEST_CASE("set partition census matches the Bell triangle") {
    CHECK(enumerate_partitions(1) == std::vector<SetPartition>{make(1, {{1}})});
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(5).size() == 52);
    for (int n = 1; n <= 9; ++n) {
        long long count = 0;
        for_each_partition(n, [&](const SetPartition&) { ++count; });
        CHECK(count == oracles::bell(n));
    }
}

TEST_CASE("non-crossing census matches the Catalan recurrence") {
    const auto empty = enumerate_noncrossing(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].n == 0);
    CHECK(empty[0].blocks.empty());

    CHECK(enumerate_noncrossing(3) == enumerate_partitions(3)); // crossings need >= 4 points

    for (int n = 0; n <= 10; ++n) {
        long long count = 0;
        for_each_noncrossing(n, [&](const SetPartition&) { ++count; });
        CHECK(count == oracles::catalan(n));
    }
}

TEST_CASE("non-crossing enumeration equals the filtered full enumeration") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<SetPartition> filtered;
        for_each_partition(n, [&](const SetPartition& p) {
            if (is_noncrossing(p)) filtered.push_back(p);
        });
        std::vector<SetPartition> direct = enumerate_noncrossing(n);
        auto lt = [](const SetPartition& x, const SetPartition& y) { return x.blocks < y.blocks; };
        std::sort(filtered.begin(), filtered.end(), lt);
        std::sort(direct.begin(), direct.end(), lt);
        CHECK(filtered == direct);
    }
    for (const auto& p : enumerate_noncrossing(6)) CHECK(is_noncrossing(p));
}

TEST_CASE("first-block-constrained enumeration") {
    // the five partitions of {1..5} with 1,2,3 in one block
    const auto got = enumerate_nc_first_block(3, 5);
    const std::set<std::string> expected{"{1,2,3}{4}{5}", "{1,2,3,4}{5}", "{1,2,3,5}{4}",
                                         "{1,2,3,4,5}", "{1,2,3}{4,5}"};
    std::set<std::string> texts;
    for (const auto& p : got) texts.insert(to_text(p));
    CHECK(texts == expected);

    CHECK(enumerate_nc_first_block(1, 6) == enumerate_noncrossing(6));

    const auto k2 = enumerate_nc_first_block(2, 3);
    REQUIRE(k2.size() == 2);
    std::set<std::string> k2texts;
    for (const auto& p : k2) k2texts.insert(to_text(p));
    CHECK(k2texts == std::set<std::string>{"{1,2}{3}", "{1,2,3}"});

    CHECK_THROWS_AS(enumerate_nc_first_block(4, 3), argument_error);

    // equals the membership filter of the plain non-crossing enumeration
    for (int m = 1; m <= 9; ++m)
        for (int k = 1; k <= m; ++k) {
            std::vector<SetPartition> filtered;
            for_each_noncrossing(m, [&](const SetPartition& p) {
                const auto& first = p.blocks[0];
                bool contains = true;
                for (int x = 1; x <= k; ++x)
                    if (!std::binary_search(first.begin(), first.end(), x)) contains = false;
                if (contains) filtered.push_back(p);
            });
            CHECK(filtered == enumerate_nc_first_block(k, m));
        }
}

TEST_CASE("pairings") {
    CHECK(enumerate_pairings(2) == std::vector<SetPartition>{make(2, {{1, 2}})});
    CHECK(enumerate_pairings(3).empty());
    const auto p4 = enumerate_pairings(4);
    REQUIRE(p4.size() == 3);
    std::set<std::string> texts;
    for (const auto& p : p4) texts.insert(to_text(p));
    CHECK(texts == std::set<std::string>{"{1,2}{3,4}", "{1,3}{2,4}", "{1,4}{2,3}"});
    for (int n = 1; n <= 6; ++n)
        CHECK(enumerate_pairings(2 * n).size() ==
              static_cast<std::size_t>(oracles::double_factorial_odd(n)));
}

TEST_CASE("is_noncrossing") {
    CHECK_FALSE(is_noncrossing(make(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(make(4, {{1, 4}, {2, 3}})));
    CHECK(is_noncrossing(make(1, {{1}})));
}

TEST_CASE("restricted crossings") {
    CHECK(restricted_crossings(make(4, {{1, 3}, {2, 4}})) == 1);
    CHECK(restricted_crossings(make(4, {{1, 4}, {2, 3}})) == 0);
    CHECK(restricted_crossings(make(6, {{1, 3, 5}, {2, 4, 6}})) == 3);

    // agrees with the literal predecessor-quadruple count, and vanishes
    // exactly on non-crossing partitions
    for (int n = 1; n <= 8; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            const int rc = restricted_crossings(p);
            CHECK(rc == oracles::restricted_crossings_quadruple(p));
            CHECK((rc == 0) == is_noncrossing(p));
        });
}

TEST_CASE("fiberwise decomposition of NC^k by the first join") {
    // NC^k(m) minus the standalone-{1..k} partitions splits over the first
    // element j > k in the block of 1 into NC(j-k-1) x NC^{k+1}(m+k-j+1).
    for (int m = 1; m <= 9; ++m)
        for (int k = 1; k <= m; ++k) {
            long long standalone = 0;
            std::map<int, long long> fiber;
            for_each_nc_first_block(k, m, [&](const SetPartition& p) {
                const auto& first = p.blocks[0];
                auto it = std::upper_bound(first.begin(), first.end(), k);
                if (it == first.end())
                    ++standalone;
                else
                    ++fiber[*it];
            });
            CHECK(standalone == oracles::catalan(m - k));
            for (int j = k + 1; j <= m; ++j) {
                long long expected = oracles::catalan(j - k - 1);
                long long count_inner = 0;
                for_each_nc_first_block(k + 1, m + k - j + 1,
                                        [&](const SetPartition&) { ++count_inner; });
                expected *= count_inner;
                CHECK(fiber[j] == expected);
            }
        }
}

TEST_CASE("enumeration order is deterministic (golden)") {
    // insertion order: next element joins existing blocks first, then opens
    // a new block
    const auto nc4 = enumerate_noncrossing(4);
    const std::vector<std::string> golden{
        "{1,2,3,4}",   "{1,2,3}{4}",  "{1,2,4}{3}",   "{1,2}{3,4}",     "{1,2}{3}{4}",
        "{1,3,4}{2}",  "{1,3}{2}{4}", "{1,4}{2,3}",   "{1}{2,3,4}",     "{1}{2,3}{4}",
        "{1,4}{2}{3}", "{1}{2,4}{3}", "{1}{2}{3,4}",  "{1}{2}{3}{4}"};
    REQUIRE(nc4.size() == golden.size());
    for (std::size_t i = 0; i < golden.size(); ++i) CHECK(to_text(nc4[i]) == golden[i]);

    const auto p3 = enumerate_partitions(3);
    const std::vector<std::string> golden3{"{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}",
                                           "{1}{2}{3}"};
    REQUIRE(p3.size() == golden3.size());
    for (std::size_t i = 0; i < golden3.size(); ++i) CHECK(to_text(p3[i]) == golden3[i]);
}

TEST_CASE("canonical form invariants on enumerated partitions") {
    for_each_partition(6, [&](const SetPartition& p) {
        int seen = 0;
        int prev_min = 0;
        for (const auto& b : p.blocks) {
            REQUIRE(!b.empty());
            CHECK(std::is_sorted(b.begin(), b.end()));
            CHECK(b.front() > prev_min);
            prev_min = b.front();
            seen += static_cast<int>(b.size());
        }
        CHECK(seen == p.n);
    });
}

TEST_CASE("serialization round-trips") {
    const SetPartition p = make(5, {{1, 2, 3}, {4, 5}});
    CHECK(to_text(p) == "{1,2,3}{4,5}");
    CHECK(partition_from_text(to_text(p)) == p);
    CHECK(partition_to_json(p).dump() == "[[1,2,3],[4,5]]");
    CHECK(partition_from_json(partition_to_json(p)) == p);

    for_each_noncrossing(6, [&](const SetPartition& q) {
        CHECK(partition_from_text(to_text(q)) == q);
        CHECK(partition_from_json(partition_to_json(q)) == q);
    });

    CHECK_THROWS_AS(partition_from_text("{1,3}"), argument_error);  // misses 2
    CHECK_THROWS_AS(partition_from_text("{1}{1}"), argument_error); // duplicate
}

TEST_CASE("caps raise resource-limit errors") {
    const EnumerationCaps saved = enumeration_caps();
    enumeration_caps() = {5, 6};
    CHECK_THROWS_WITH_AS(static_cast<void>(enumerate_partitions(6)),
                         doctest::Contains("Bell"), resource_limit_error);
    CHECK_THROWS_AS(static_cast<void>(enumerate_noncrossing(7)), resource_limit_error);
    CHECK_THROWS_AS(static_cast<void>(enumerate_nc_first_block(2, 7)), resource_limit_error);
    CHECK_THROWS_AS(static_cast<void>(enumerate_pairings(6)), resource_limit_error);
    CHECK(enumerate_pairings(4).size() == 3);
    enumeration_caps() = saved;
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(make(3, {{1, 2}}), argument_error);          // misses 3
    CHECK_THROWS_AS(make(3, {{1, 2}, {2, 3}}), argument_error);  // overlap
    CHECK_THROWS_AS(make(3, {{1, 2, 3, 4}}), argument_error);    // out of range
    CHECK_THROWS_AS(make(2, {{1}, {}, {2}}), argument_error);    // empty block
    // canonicalization sorts blocks and elements
    const SetPartition p = make(4, {{4, 2}, {3, 1}});
    CHECK(to_text(p) == "{1,3}{2,4}");
}
