#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "freeprob/rational.hpp"

namespace freeprob {

/// Default jet order used by the Meixner helpers when none is given; deep
/// enough for every identity checked by the verification suite.
inline constexpr int kDefaultSeriesOrder = 14;

/// Truncated formal power series with exact rational coefficients
/// c_0 + c_1 z + ... + c_N z^N. Arithmetic never reads past the order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order)
        : coeffs_(static_cast<std::size_t>(check_order(order)) + 1, Rational(0)) {}

    static TruncatedSeries constant(const Rational& value, int order) {
        TruncatedSeries s(order);
        s.coeff(0) = value;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Rational& coeff(int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries& other) const = default;

private:
    static int check_order(int order);
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_neg(const TruncatedSeries& s);
TruncatedSeries series_scale(const TruncatedSeries& s, const Rational& c);

/// Multiplication by z^k (coefficients shifted up, truncated at the order).
TruncatedSeries series_shift(const TruncatedSeries& s, int k);

/// Cauchy product truncated at the common order. Orders must match.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Multiplicative inverse jet; requires a nonzero constant term.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

/// Square-root jet on the principal branch: requires constant term 1,
/// returns the unique jet with constant term 1 whose square is s.
TruncatedSeries series_sqrt_one(const TruncatedSeries& s);

/// JSON form {"order": N, "coeffs": ["p/q", ...]}.
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

} // namespace freeprob
