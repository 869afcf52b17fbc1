#include <doctest.h>

#include <nlohmann/json.hpp>

#include "freeprob/cumulants.hpp"
#include "freeprob/enumerate.hpp"
#include "freeprob/meixner.hpp"
#include "oracles.hpp"

using namespace freeprob;

namespace {

Rational rat(const char* s) { return parse_rational(s); }

const std::vector<std::pair<Rational, Rational>>& param_grid() {
    static std::vector<std::pair<Rational, Rational>> grid = [] {
        std::vector<std::pair<Rational, Rational>> g;
        for (const char* a : {"0", "1", "2", "-1"})
            for (const char* b : {"0", "1/3", "1", "-1/4"}) g.emplace_back(rat(a), rat(b));
        return g;
    }();
    return grid;
}

} // namespace

TEST_CASE("classification of the six law classes") {
    CHECK(classify({rat("0"), rat("0")}) == LawClass::Semicircle);
    CHECK(classify({rat("1"), rat("0")}) == LawClass::FreePoisson);
    CHECK(classify({rat("3"), rat("1")}) == LawClass::FreePascal);     // 9 > 4
    CHECK(classify({rat("2"), rat("1")}) == LawClass::FreeGamma);      // 4 = 4
    CHECK(classify({rat("1"), rat("1")}) == LawClass::PureFreeMeixner);// 1 < 4
    CHECK(classify({rat("1"), rat("-1/2")}) == LawClass::FreeBinomial);
    CHECK(classify({rat("0"), rat("-1")}) == LawClass::FreeBinomial);
    CHECK_THROWS_AS(MeixnerParams(rat("0"), rat("-2")), domain_error);
    CHECK(law_to_string(LawClass::FreeGamma) == "FreeGamma");
}

TEST_CASE("classify is total: exactly one class predicate holds") {
    for (const char* a : {"-3", "-2", "-1", "0", "1/2", "1", "2", "7/2"})
        for (const char* b : {"-1", "-1/2", "-1/4", "0", "1/16", "1/4", "1", "49/16", "4"}) {
            const MeixnerParams p(rat(a), rat(b));
            int hits = 0;
            if (p.a == 0 && p.b == 0) ++hits;                          // Semicircle
            if (p.b == 0 && p.a != 0) ++hits;                          // FreePoisson
            if (p.b > 0 && p.a * p.a > 4 * p.b) ++hits;                // FreePascal
            if (p.b > 0 && p.a * p.a == 4 * p.b) ++hits;               // FreeGamma
            if (p.b > 0 && p.a * p.a < 4 * p.b) ++hits;                // PureFreeMeixner
            if (p.b < 0) ++hits;                                       // FreeBinomial
            CHECK(hits == 1);
            CHECK_NOTHROW(static_cast<void>(classify(p)));
        }
}

TEST_CASE("semicircle moment series has Catalan even moments") {
    const TruncatedSeries m = moment_series({rat("0"), rat("0")}, 6);
    // oracle: number of non-crossing pair partitions, by enumeration
    for (int n = 1; n <= 6; ++n) {
        long long pairings = 0;
        for_each_noncrossing(n, [&](const SetPartition& p) {
            for (const auto& b : p.blocks)
                if (b.size() != 2) return;
            ++pairings;
        });
        CHECK(m.coeff(n) == pairings);
    }
    CHECK(m.coeff(2) == 1);
    CHECK(m.coeff(4) == 2);
    CHECK(m.coeff(6) == 5);
}

TEST_CASE("every law is centered with unit variance") {
    for (const auto& [a, b] : param_grid()) {
        const TruncatedSeries m = moment_series({a, b}, 4);
        CHECK(m.coeff(0) == 1);
        CHECK(m.coeff(1) == 0);
        CHECK(m.coeff(2) == 1);
    }
}

TEST_CASE("free Poisson moments from the all-ones cumulant sequence") {
    CumulantSequence R(4);
    for (int k = 2; k <= 4; ++k) R.at(k) = Rational(1);
    const TruncatedSeries m = moment_series({rat("1"), rat("0")}, 4);
    for (int n = 1; n <= 4; ++n) CHECK(m.coeff(n) == oracles::nc_moment_sum(R, n));
    CHECK(m.coeff(3) == 1);
    CHECK(m.coeff(4) == 3);
}

TEST_CASE("closed form agrees with the quadratic solve whenever b != 0") {
    for (const auto& [a, b] : param_grid()) {
        if (b == 0) continue;
        CHECK(moment_series({a, b}, 12) == moment_series_closed_form({a, b}, 12));
    }
    CHECK_THROWS_AS(moment_series_closed_form({rat("1"), rat("0")}, 6), domain_error);
}

TEST_CASE("cumulant sequence examples") {
    const CumulantSequence semi = cumulant_sequence({rat("0"), rat("0")}, 10);
    for (int k = 1; k <= 10; ++k) CHECK(semi.at(k) == (k == 2 ? 1 : 0));

    const CumulantSequence poisson = cumulant_sequence({rat("1"), rat("0")}, 10);
    CHECK(poisson.at(1) == 0);
    for (int k = 2; k <= 10; ++k) CHECK(poisson.at(k) == 1);

    // free Poisson with rate a: R_k = a^{k-2}
    const CumulantSequence pa = cumulant_sequence({rat("3"), rat("0")}, 8);
    for (int k = 2; k <= 8; ++k) CHECK(pa.at(k) == rational_pow(rat("3"), k - 2));

    for (const auto& [a, b] : param_grid()) {
        const CumulantSequence R = cumulant_sequence({a, b}, 6);
        CHECK(R.at(1) == 0);
        CHECK(R.at(2) == 1);
        CHECK(R.at(3) == a);
        CHECK(R.at(4) == a * a + b);
    }
}

TEST_CASE("cumulants satisfy the functional recursion R = z(1 + aR + bR^2)") {
    for (const auto& [a, b] : param_grid()) {
        const CumulantSequence R = cumulant_sequence({a, b}, 12);
        TruncatedSeries r(11); // R(z) = sum R_{k} z^{k-1}, complete through z^11
        for (int k = 1; k <= 12; ++k) r.coeff(k - 1) = R.at(k);
        TruncatedSeries rhs = series_scale(series_mul(r, r), b);
        rhs = series_add(rhs, series_scale(r, a));
        rhs = series_add(rhs, TruncatedSeries::one(11));
        rhs = series_shift(rhs, 1);
        CHECK(r == rhs);
    }
}

TEST_CASE("moment-cumulant round trip on the parameter grid") {
    for (const auto& [a, b] : param_grid()) {
        const int order = 12;
        const TruncatedSeries ms = moment_series({a, b}, order);
        MomentSequence m(order);
        for (int n = 1; n <= order; ++n) m.at(n) = ms.coeff(n);
        CHECK(free_cumulants_from_moments(m, order) == cumulant_sequence({a, b}, order));
    }
}

TEST_CASE("dilation") {
    MomentSequence m(5);
    for (int k = 1; k <= 5; ++k) m.at(k) = Rational(k);
    CHECK(dilate_moments(m, Rational(1)) == m);
    const MomentSequence z = dilate_moments(m, Rational(0));
    for (int k = 1; k <= 5; ++k) CHECK(z.at(k) == 0);
    CHECK(dilate_moments(dilate_moments(m, rat("3/7")), rat("7/3")) == m);

    // semicircle with variance alpha: m4 = 2 alpha^2
    const Rational alpha = rat("1/4");
    const TruncatedSeries semi = moment_series({rat("0"), rat("0")}, 4);
    MomentSequence sm(4);
    for (int n = 1; n <= 4; ++n) sm.at(n) = semi.coeff(n);
    // c = sqrt(alpha) = 1/2
    const MomentSequence scaled = dilate_moments(sm, rat("1/2"));
    CHECK(scaled.at(4) == 2 * alpha * alpha);
    CHECK(scaled.at(2) == alpha);
}

TEST_CASE("component cumulants are pinned by the convolution oracle") {
    // oracle: expand the convolution quadratic, convert the jet to cumulants,
    // split alpha : beta; this defines the component sequences
    for (const auto& [a, b] : param_grid()) {
        for (const auto& [as, bs] :
             {std::pair{rat("1/2"), rat("1/2")}, std::pair{rat("1/4"), rat("3/4")}}) {
            const int order = 10;
            const TruncatedSeries conv = convolution_moment_series(a, b, {as, bs}, order);
            MomentSequence m(order);
            for (int n = 1; n <= order; ++n) m.at(n) = conv.coeff(n);
            const CumulantSequence sum = free_cumulants_from_moments(m, order);
            CHECK(component_cumulants({a, b}, as, order) == sequence_scale(sum, as));
            CHECK(component_cumulants({a, b}, bs, order) == sequence_scale(sum, bs));
            CHECK(sequence_add(component_cumulants({a, b}, as, order),
                               component_cumulants({a, b}, bs, order)) == sum);
        }
    }
}

TEST_CASE("component cumulants basics") {
    const MeixnerParams p(rat("1"), rat("1"));
    CHECK(component_cumulants(p, Rational(1), 8) == cumulant_sequence(p, 8));
    const CumulantSequence semi = component_cumulants({rat("0"), rat("0")}, rat("1/3"), 8);
    for (int k = 1; k <= 8; ++k) CHECK(semi.at(k) == (k == 2 ? rat("1/3") : 0));
    CHECK(component_cumulants(p, rat("2/5"), 6).at(2) == rat("2/5"));
    CHECK_THROWS_AS(component_cumulants(p, Rational(0), 6), domain_error);
}

TEST_CASE("convolution moment series") {
    const WeightPair half{rat("1/2"), rat("1/2")};
    CHECK(convolution_moment_series(rat("0"), rat("0"), half, 8) ==
          moment_series({rat("0"), rat("0")}, 8));
    const TruncatedSeries m = convolution_moment_series(rat("1"), rat("1"), half, 8);
    CHECK(m.coeff(0) == 1);
    CHECK(m.coeff(1) == 0);
    CHECK(m.coeff(2) == 1);

    CHECK_THROWS_AS(convolution_moment_series(rat("1"), rat("0"), {rat("1/2"), rat("1/3")}, 6),
                    domain_error);
    // free binomial constraint: b >= max{-alpha, -beta}
    CHECK_THROWS_AS(convolution_moment_series(rat("1"), rat("-3/5"), half, 6), domain_error);
    CHECK_NOTHROW(convolution_moment_series(rat("1"), rat("-1/4"), {rat("1/4"), rat("3/4")}, 6));
    CHECK_THROWS_AS(convolution_moment_series(rat("1"), rat("-1/3"), {rat("1/4"), rat("3/4")}, 6),
                    domain_error);
    CHECK_THROWS_AS(WeightPair(rat("0"), rat("1")), domain_error);
}

TEST_CASE("meixner summary JSON") {
    const nlohmann::json j = meixner_summary_json({rat("1"), rat("0")}, 4);
    CHECK(j.at("class") == "FreePoisson");
    CHECK(j.at("a") == "1");
    CHECK(j.at("moments") == nlohmann::json({"0", "1", "1", "3"}));
    CHECK(j.at("cumulants") == nlohmann::json({"0", "1", "1", "1"}));
}
