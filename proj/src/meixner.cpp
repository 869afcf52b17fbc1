#include "freeprob/meixner.hpp"

#include <nlohmann/json.hpp>

namespace freeprob {

std::string law_to_string(LawClass c) {
    switch (c) {
        case LawClass::Semicircle: return "Semicircle";
        case LawClass::FreePoisson: return "FreePoisson";
        case LawClass::FreePascal: return "FreePascal";
        case LawClass::FreeGamma: return "FreeGamma";
        case LawClass::PureFreeMeixner: return "PureFreeMeixner";
        case LawClass::FreeBinomial: return "FreeBinomial";
    }
    throw argument_error("law_to_string: unknown class");
}

LawClass classify(const MeixnerParams& params) {
    const Rational& a = params.a;
    const Rational& b = params.b;
    if (b == 0) return a == 0 ? LawClass::Semicircle : LawClass::FreePoisson;
    if (b < 0) return LawClass::FreeBinomial;
    const Rational disc = a * a - 4 * b;
    if (disc > 0) return LawClass::FreePascal;
    if (disc == 0) return LawClass::FreeGamma;
    return LawClass::PureFreeMeixner;
}

namespace {

// Coefficient-by-coefficient solve of
//   (z^2 + az + b) M^2 - (1+2b) M - az M + (1+b) = 0,  M(0) = 1.
// At order n >= 1 the unknown m_n enters as (2b - (1+2b)) m_n = -m_n, so each
// step is a linear solve with coefficient -1; the recursion never degenerates.
TruncatedSeries solve_meixner_quadratic(const Rational& a, const Rational& b, int order) {
    TruncatedSeries m(order);
    m.coeff(0) = Rational(1);
    std::vector<Rational> sq(static_cast<std::size_t>(order) + 1, Rational(0)); // M^2 so far
    sq[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        // residual at z^n with m_n = 0:
        //   b*sq_n + a*sq_{n-1} + sq_{n-2} - (1+2b)*0 - a*m_{n-1} - ... ;
        // sq_n currently holds sum_{i=1..n-1} m_i m_{n-i} (the m_n-free part).
        Rational resid = b * sq[static_cast<std::size_t>(n)];
        resid += a * sq[static_cast<std::size_t>(n - 1)];
        if (n >= 2) resid += sq[static_cast<std::size_t>(n - 2)];
        resid -= a * m.coeff(n - 1);
        m.coeff(n) = resid; // resid - m_n = 0
        // fold m_n into the running square; pairs (n, j) with j > n are added
        // later, when m_j itself is set
        for (int k = n; k <= order; ++k) {
            const int other = k - n;
            if (other < n)
                sq[static_cast<std::size_t>(k)] += 2 * m.coeff(n) * m.coeff(other);
            else if (other == n)
                sq[static_cast<std::size_t>(k)] += m.coeff(n) * m.coeff(n);
        }
    }
    return m;
}

} // namespace

TruncatedSeries moment_series(const MeixnerParams& params, int order) {
    return solve_meixner_quadratic(params.a, params.b, order);
}

TruncatedSeries moment_series_closed_form(const MeixnerParams& params, int order) {
    const Rational& a = params.a;
    const Rational& b = params.b;
    if (b == 0)
        throw domain_error("moment_series_closed_form: degenerate at b = 0 (0/0); "
                           "use moment_series");
    // radicand (1 - za)^2 - 4 z^2 (1+b)
    TruncatedSeries rad(order);
    rad.coeff(0) = Rational(1);
    if (order >= 1) rad.coeff(1) = -2 * a;
    if (order >= 2) rad.coeff(2) = a * a - 4 * (1 + b);
    TruncatedSeries num(order);
    num.coeff(0) = 1 + 2 * b;
    if (order >= 1) num.coeff(1) = a;
    num = series_sub(num, series_sqrt_one(rad));
    TruncatedSeries den(order);
    den.coeff(0) = 2 * b;
    if (order >= 1) den.coeff(1) = 2 * a;
    if (order >= 2) den.coeff(2) = Rational(2);
    return series_mul(num, series_reciprocal(den));
}

CumulantSequence cumulant_sequence(const MeixnerParams& params, int order) {
    const Rational& a = params.a;
    const Rational& b = params.b;
    // R(z) = 2z / (1 - za + sqrt((1-za)^2 - 4 z^2 b)), R_k = [z^{k-1}] R(z)
    TruncatedSeries rad(order);
    rad.coeff(0) = Rational(1);
    if (order >= 1) rad.coeff(1) = -2 * a;
    if (order >= 2) rad.coeff(2) = a * a - 4 * b;
    TruncatedSeries den(order);
    den.coeff(0) = Rational(1);
    if (order >= 1) den.coeff(1) = -a;
    den = series_add(den, series_sqrt_one(rad));
    const TruncatedSeries inv = series_reciprocal(den); // constant term 1/2
    CumulantSequence r(order);
    for (int k = 2; k <= order; ++k) r.at(k) = 2 * inv.coeff(k - 2);
    return r;
}

MomentSequence dilate_moments(const MomentSequence& m, const Rational& c) {
    return dilate(m, c);
}

CumulantSequence component_cumulants(const MeixnerParams& params, const Rational& weight,
                                     int order) {
    if (weight <= 0) throw domain_error("component_cumulants: weight must be positive");
    return sequence_scale(cumulant_sequence(params, order), weight);
}

TruncatedSeries convolution_moment_series(const Rational& a, const Rational& b,
                                          const WeightPair& w, int order) {
    if (w.alpha + w.beta != 1)
        throw domain_error("convolution_moment_series: requires alpha + beta = 1");
    if (b < -1) throw domain_error("convolution_moment_series: requires b >= -1");
    if (b < 0) {
        const Rational floor = w.alpha > w.beta ? -w.beta : -w.alpha; // max{-alpha,-beta}
        if (b < floor)
            throw domain_error("convolution_moment_series: free binomial constraint "
                               "b >= max{-alpha, -beta} violated (b = " +
                               to_fraction_string(b) + ", floor = " + to_fraction_string(floor) +
                               ")");
    }
    return solve_meixner_quadratic(a, b, order);
}

nlohmann::json meixner_summary_json(const MeixnerParams& params, int order) {
    const TruncatedSeries m = moment_series(params, order);
    const CumulantSequence r = cumulant_sequence(params, order);
    nlohmann::json moments = nlohmann::json::array();
    for (int k = 1; k <= order; ++k) moments.push_back(to_fraction_string(m.coeff(k)));
    nlohmann::json cumulants = nlohmann::json::array();
    for (int k = 1; k <= order; ++k) cumulants.push_back(to_fraction_string(r.at(k)));
    return nlohmann::json{{"a", to_fraction_string(params.a)},
                          {"b", to_fraction_string(params.b)},
                          {"class", law_to_string(classify(params))},
                          {"moments", moments},
                          {"cumulants", cumulants}};
}

} // namespace freeprob
