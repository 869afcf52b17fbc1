#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "freeprob/sequences.hpp"
#include "freeprob/series.hpp"

namespace freeprob {

/// Parameters of the two-parameter free Meixner family mu_{a,b}
/// (mean 0, variance 1). Admissible range: a rational, b >= -1.
struct MeixnerParams {
    Rational a;
    Rational b;

    MeixnerParams(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (b < -1) throw domain_error("MeixnerParams: requires b >= -1");
    }
};

enum class LawClass {
    Semicircle,      // a = 0, b = 0
    FreePoisson,     // b = 0, a != 0
    FreePascal,      // b > 0, a^2 > 4b
    FreeGamma,       // b > 0, a^2 = 4b
    PureFreeMeixner, // b > 0, a^2 < 4b
    FreeBinomial,    // -1 <= b < 0
};

std::string law_to_string(LawClass c);

/// The six classes partition the admissible parameter half-plane.
LawClass classify(const MeixnerParams& params);

/// Moment generating jet M(z) = 1 + sum m_n z^n of mu_{a,b}, computed by the
/// coefficient-recursive solve of the quadratic
///     (z^2 + az + b) M^2 - (1 + az + 2b) M + 1 + b = 0,   M(0) = 1,
/// which stays regular at b = 0 where the closed form degenerates to 0/0.
/// Always has m_1 = 0 and m_2 = 1.
TruncatedSeries moment_series(const MeixnerParams& params, int order = kDefaultSeriesOrder);

/// Closed-form jet (1 + 2b + az - sqrt((1-za)^2 - 4z^2(1+b))) / (2(z^2+az+b)),
/// valid only for b != 0; retained as an independent cross-check of
/// moment_series.
TruncatedSeries moment_series_closed_form(const MeixnerParams& params,
                                          int order = kDefaultSeriesOrder);

/// Free cumulants of mu_{a,b}: jet of the R-transform
///     R(z) = 2z / (1 - za + sqrt((1-za)^2 - 4z^2 b)),
/// reindexed so entry k is R_k (the coefficient of z^{k-1}).
/// R_1 = 0, R_2 = 1, R_3 = a, R_4 = a^2 + b.
CumulantSequence cumulant_sequence(const MeixnerParams& params, int order = kDefaultSeriesOrder);

/// Moments of cX from moments of X (entry n scaled by c^n); equally usable on
/// cumulant sequences. See also dilate() in sequences.hpp.
MomentSequence dilate_moments(const MomentSequence& m, const Rational& c);

/// Free cumulants of the variance-weight component X of a free splitting
/// X + Y, where X/sqrt(weight) has the law mu_{a/sqrt(weight), b/weight}:
///     R_k(X) = weight * R_k(mu_{a,b}).
/// The scaling rule follows from the functional equation R = z(1 + aR + bR^2)
/// and is pinned by the Lemma 2.6 additivity oracle in the test suite, so all
/// arithmetic stays rational (no sqrt(weight) ever appears).
/// R_1 = 0 and R_2 = weight.
CumulantSequence component_cumulants(const MeixnerParams& params, const Rational& weight,
                                     int order = kDefaultSeriesOrder);

/// Positive convolution weights. The sum-to-one constraint is checked by the
/// operations that require it, not here (general positive pairs are valid for
/// the Levy-process normalization).
struct WeightPair {
    Rational alpha;
    Rational beta;

    WeightPair(Rational alpha_, Rational beta_)
        : alpha(std::move(alpha_)), beta(std::move(beta_)) {
        if (alpha <= 0 || beta <= 0) throw domain_error("WeightPair: weights must be positive");
    }
};

/// Moment jet of X + Y for the two free Meixner components with weights
/// (alpha, beta), alpha + beta = 1: the unique jet with M(0) = 1 solving
/// (z^2 + az + b) M^2 - (1 + az + 2b) M + 1 + b = 0.
/// Preconditions: alpha + beta = 1; b >= -1; and for b < 0 additionally
/// b >= max{-alpha, -beta} (free binomial constraint).
TruncatedSeries convolution_moment_series(const Rational& a, const Rational& b,
                                          const WeightPair& w, int order = kDefaultSeriesOrder);

/// CLI-facing summary: {"a", "b", "class", "moments", "cumulants"} with exact
/// fraction strings; moments/cumulants list entries 1..order.
nlohmann::json meixner_summary_json(const MeixnerParams& params, int order);

} // namespace freeprob
