#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "freeprob/errors.hpp"

namespace freeprob {

/// Set partition of {1..n} in canonical form: every block sorted ascending,
/// blocks ordered by their minima. Two partitions are equal iff their
/// canonical forms compare equal element by element.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    /// Canonicalizes and validates: blocks must be disjoint, nonempty, and
    /// cover {1..n} exactly.
    static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

    int block_count() const { return static_cast<int>(blocks.size()); }

    /// Index of the block containing element x (1-based element).
    int block_of(int x) const;

    bool operator==(const SetPartition& other) const = default;
};

/// True iff no quadruple i<j<k<l has i,k in one block and j,l in another.
bool is_noncrossing(const SetPartition& p);

/// Number of restricted crossings: pairs of within-block consecutive arcs
/// (x1,x2), (y1,y2) from different blocks with x1 < y1 < x2 < y2.
/// Zero exactly on non-crossing partitions.
int restricted_crossings(const SetPartition& p);

/// Compact text form, e.g. "{1,2,3}{4,5}". The empty partition prints "{}".
std::string to_text(const SetPartition& p);
SetPartition partition_from_text(std::string_view text);

/// JSON array of arrays, e.g. [[1,2,3],[4,5]].
nlohmann::json partition_to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

} // namespace freeprob
