#pragma once

#include <vector>

#include "freeprob/rational.hpp"

namespace freeprob {

namespace detail {

/// Dense 1-based exact sequence: entry k for 1 <= k <= order.
template <class Tag>
struct IndexedSequence {
    std::vector<Rational> entries;

    IndexedSequence() = default;
    explicit IndexedSequence(int order) : entries(static_cast<std::size_t>(order), Rational(0)) {
        if (order < 0) throw argument_error("sequence order must be nonnegative");
    }
    explicit IndexedSequence(std::vector<Rational> values) : entries(std::move(values)) {}

    int order() const { return static_cast<int>(entries.size()); }

    const Rational& at(int k) const {
        if (k < 1 || k > order()) throw argument_error("sequence index out of range");
        return entries[static_cast<std::size_t>(k - 1)];
    }
    Rational& at(int k) {
        if (k < 1 || k > order()) throw argument_error("sequence index out of range");
        return entries[static_cast<std::size_t>(k - 1)];
    }

    bool operator==(const IndexedSequence&) const = default;
};

} // namespace detail

/// Moments m_1..m_order; m_0 = 1 is implicit everywhere.
using MomentSequence = detail::IndexedSequence<struct MomentTag>;

/// Cumulants R_1..R_order (free or q-deformed, depending on context).
using CumulantSequence = detail::IndexedSequence<struct CumulantTag>;

/// Entry k |-> c^k * entry k. Realizes the dilation X -> cX on either
/// moments or cumulants.
template <class Tag>
detail::IndexedSequence<Tag> dilate(const detail::IndexedSequence<Tag>& seq, const Rational& c) {
    detail::IndexedSequence<Tag> out(seq.order());
    Rational power(1);
    for (int k = 1; k <= seq.order(); ++k) {
        power *= c;
        out.at(k) = power * seq.at(k);
    }
    return out;
}

/// Entrywise sum; orders must agree.
template <class Tag>
detail::IndexedSequence<Tag> sequence_add(const detail::IndexedSequence<Tag>& a,
                                          const detail::IndexedSequence<Tag>& b) {
    if (a.order() != b.order()) throw argument_error("sequence_add: order mismatch");
    detail::IndexedSequence<Tag> out(a.order());
    for (int k = 1; k <= a.order(); ++k) out.at(k) = a.at(k) + b.at(k);
    return out;
}

template <class Tag>
detail::IndexedSequence<Tag> sequence_scale(const detail::IndexedSequence<Tag>& a,
                                            const Rational& c) {
    detail::IndexedSequence<Tag> out(a.order());
    for (int k = 1; k <= a.order(); ++k) out.at(k) = c * a.at(k);
    return out;
}

} // namespace freeprob
