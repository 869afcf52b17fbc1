#include "freeprob/series.hpp"

#include <nlohmann/json.hpp>

namespace freeprob {

int TruncatedSeries::check_order(int order) {
    if (order < 0) throw argument_error("TruncatedSeries: order must be nonnegative");
    return order;
}

namespace {

void require_same_order(const TruncatedSeries& s, const TruncatedSeries& t, const char* op) {
    if (s.order() != t.order())
        throw argument_error(std::string(op) + ": order mismatch (" + std::to_string(s.order()) +
                             " vs " + std::to_string(t.order()) + ")");
}

} // namespace

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "series_add");
    TruncatedSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.coeff(i) = s.coeff(i) + t.coeff(i);
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "series_sub");
    TruncatedSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.coeff(i) = s.coeff(i) - t.coeff(i);
    return r;
}

TruncatedSeries series_neg(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.coeff(i) = -s.coeff(i);
    return r;
}

TruncatedSeries series_scale(const TruncatedSeries& s, const Rational& c) {
    TruncatedSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.coeff(i) = s.coeff(i) * c;
    return r;
}

TruncatedSeries series_shift(const TruncatedSeries& s, int k) {
    if (k < 0) throw argument_error("series_shift: k must be nonnegative");
    TruncatedSeries r(s.order());
    for (int i = 0; i + k <= s.order(); ++i) r.coeff(i + k) = s.coeff(i);
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "series_mul");
    TruncatedSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i) {
        if (s.coeff(i) == 0) continue;
        for (int j = 0; i + j <= s.order(); ++j) {
            if (t.coeff(j) == 0) continue;
            r.coeff(i + j) += s.coeff(i) * t.coeff(j);
        }
    }
    return r;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
    if (s.coeff(0) == 0)
        throw singularity_error("series_reciprocal: zero constant term");
    TruncatedSeries r(s.order());
    r.coeff(0) = Rational(1) / s.coeff(0);
    for (int n = 1; n <= s.order(); ++n) {
        Rational acc(0);
        for (int i = 1; i <= n; ++i) acc += s.coeff(i) * r.coeff(n - i);
        r.coeff(n) = -acc / s.coeff(0);
    }
    return r;
}

TruncatedSeries series_sqrt_one(const TruncatedSeries& s) {
    if (s.coeff(0) != 1)
        throw branch_error("series_sqrt_one: constant term must be 1 (principal jet only)");
    TruncatedSeries r(s.order());
    r.coeff(0) = Rational(1);
    for (int n = 1; n <= s.order(); ++n) {
        // c_n = 2 r_n + sum_{i=1..n-1} r_i r_{n-i}
        Rational acc(0);
        for (int i = 1; i < n; ++i) acc += r.coeff(i) * r.coeff(n - i);
        r.coeff(n) = (s.coeff(n) - acc) / 2;
    }
    return r;
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(to_fraction_string(s.coeff(i)));
    return nlohmann::json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw argument_error("series json: coeffs length must be order + 1");
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i)
        s.coeff(i) = parse_rational(coeffs.at(static_cast<std::size_t>(i)).get<std::string>());
    return s;
}

} // namespace freeprob
