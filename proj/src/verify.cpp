#include "freeprob/verify.hpp"

#include <nlohmann/json.hpp>

namespace freeprob {

namespace {

void record(VerificationReport& rep, int n, Rational lhs, Rational rhs, std::string label = {}) {
    if (lhs != rhs) rep.failures.push_back({n, std::move(lhs), std::move(rhs), std::move(label)});
}

LinearCombo combo2(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

Word sandwich_word(const LinearCombo& outer, const LinearCombo& mid, int tail) {
    Word w;
    w.letters = {outer, mid, outer};
    for (int i = 0; i < tail; ++i) w.letters.push_back(mid);
    return w;
}

Word power_word(const LinearCombo& letter, int n) {
    Word w;
    w.letters.assign(static_cast<std::size_t>(n), letter);
    return w;
}

} // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) params[key] = to_fraction_string(value);
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        nlohmann::json jf{{"n", f.n},
                          {"lhs", to_fraction_string(f.lhs)},
                          {"rhs", to_fraction_string(f.rhs)}};
        if (!f.label.empty()) jf["label"] = f.label;
        failures.push_back(std::move(jf));
    }
    return nlohmann::json{{"claim", report.claim},
                          {"params", params},
                          {"orders", {report.order_lo, report.order_hi}},
                          {"verdict", report.pass() ? "pass" : "fail"},
                          {"failures", failures},
                          {"notes", report.notes}};
}

std::vector<std::string> report_to_csv_rows(const VerificationReport& report) {
    std::string key;
    for (const auto& [name, value] : report.params) {
        if (!key.empty()) key += ';';
        key += name + "=" + to_fraction_string(value);
    }
    std::vector<std::string> rows;
    if (report.pass()) {
        rows.push_back(report.claim + "," + key + "," + std::to_string(report.order_lo) + "-" +
                       std::to_string(report.order_hi) + ",pass,,");
    } else {
        for (const auto& f : report.failures)
            rows.push_back(report.claim + "," + key + "," + std::to_string(f.n) + ",fail," +
                           to_fraction_string(f.lhs) + "," + to_fraction_string(f.rhs));
    }
    return rows;
}

VerificationReport check_lemma22(const CumulantSequence& R, int kmax, int nmax) {
    if (kmax < 1 || nmax < 1) throw argument_error("check_lemma22: kmax, nmax must be positive");
    if (nmax > R.order() || kmax + 1 > R.order())
        throw argument_error("check_lemma22: kmax/nmax exceed the order of R");
    // pairs with k + n beyond the order of R are skipped below
    VerificationReport rep;
    rep.claim = "lemma22";
    rep.order_lo = 1;
    rep.order_hi = nmax;
    std::vector<Rational> m{Rational(1)}; // m_0
    for (int i = 1; i <= nmax; ++i) m.push_back(moments_from_free_cumulants(R, i));
    for (int k = 1; k <= kmax; ++k)
        for (int n = 1; n <= nmax; ++n) {
            if (k + n > R.order()) continue;
            const Rational lhs = ckn(R, k, n);
            Rational rhs = R.at(k) * m[static_cast<std::size_t>(n)];
            for (int i = 0; i <= n - 1; ++i)
                rhs += m[static_cast<std::size_t>(i)] * ckn(R, k + 1, n - 1 - i);
            record(rep, n, lhs, rhs, "k=" + std::to_string(k));
        }
    return rep;
}

VerificationReport check_series_ladder(const CumulantSequence& R, int kmax, int order) {
    if (kmax < 1) throw argument_error("check_series_ladder: kmax must be positive");
    if (order < kmax + 1 || order > R.order())
        throw argument_error("check_series_ladder: order out of range");
    VerificationReport rep;
    rep.claim = "ladder";
    rep.order_lo = 0;
    rep.order_hi = order;

    TruncatedSeries M(order);
    M.coeff(0) = Rational(1);
    for (int i = 1; i <= order; ++i) M.coeff(i) = moments_from_free_cumulants(R, i);

    auto C = [&](int k) {
        TruncatedSeries c(order);
        for (int n = 0; k + n <= order; ++n) c.coeff(k + n) = ckn(R, k, n);
        return c;
    };

    std::vector<TruncatedSeries> Cs;
    for (int k = 1; k <= kmax + 1; ++k) Cs.push_back(C(k));

    for (int k = 1; k <= kmax; ++k) {
        const TruncatedSeries& lhs = Cs[static_cast<std::size_t>(k - 1)];
        TruncatedSeries rhs = series_mul(M, Cs[static_cast<std::size_t>(k)]);
        rhs = series_add(rhs, series_scale(series_shift(M, k), R.at(k)));
        for (int i = 0; i <= order; ++i)
            record(rep, i, lhs.coeff(i), rhs.coeff(i), "ladder k=" + std::to_string(k));
    }

    // k = 1 specializations: C^(1) = M - 1 and 1/M = 1 - C^(2) - R_1 z
    {
        TruncatedSeries m1 = series_sub(M, TruncatedSeries::one(order));
        for (int i = 0; i <= order; ++i)
            record(rep, i, Cs[0].coeff(i), m1.coeff(i), "C1=M-1");
        TruncatedSeries invM = series_reciprocal(M);
        TruncatedSeries rhs = series_sub(TruncatedSeries::one(order), Cs[1]);
        TruncatedSeries r1z(order);
        if (order >= 1) r1z.coeff(1) = R.at(1);
        rhs = series_sub(rhs, r1z);
        for (int i = 0; i <= order; ++i)
            record(rep, i, invM.coeff(i), rhs.coeff(i), "1/M");
    }
    return rep;
}

VerificationReport check_convolution_quadratic(const Rational& a, const Rational& b,
                                               const WeightPair& w, int order) {
    VerificationReport rep;
    rep.claim = "convolution";
    rep.params = {{"a", a}, {"b", b}, {"alpha", w.alpha}, {"beta", w.beta}};
    rep.order_lo = 0;
    rep.order_hi = order;

    const TruncatedSeries M = convolution_moment_series(a, b, w, order);
    const MeixnerParams params(a, b);
    if (classify(params) == LawClass::FreeBinomial)
        rep.notes.push_back("FreeBinomial parameters: treated as a formal moment sequence");
    if (b == Rational(-1, 2))
        rep.notes.push_back("b = -1/2: converse recovery is degenerate at these parameters");

    // residual of (z^2 + az + b) M^2 - (1 + az + 2b) M + (1 + b)
    TruncatedSeries quad(order);
    quad.coeff(0) = b;
    if (order >= 1) quad.coeff(1) = a;
    if (order >= 2) quad.coeff(2) = Rational(1);
    TruncatedSeries lin(order);
    lin.coeff(0) = 1 + 2 * b;
    if (order >= 1) lin.coeff(1) = a;
    TruncatedSeries residual = series_mul(quad, series_mul(M, M));
    residual = series_sub(residual, series_mul(lin, M));
    residual = series_add(residual, TruncatedSeries::constant(1 + b, order));
    for (int i = 0; i <= order; ++i)
        record(rep, i, residual.coeff(i), Rational(0), "quadratic residual");

    // cumulant additivity: cumulants of M = component(alpha) + component(beta)
    const int xorder = std::min(order, enumeration_caps().noncrossing);
    if (xorder < order)
        rep.notes.push_back("cumulant additivity cross-checked to order " +
                            std::to_string(xorder) + " (enumeration cap)");
    const CumulantSequence sum = sequence_add(component_cumulants(params, w.alpha, xorder),
                                              component_cumulants(params, w.beta, xorder));
    MomentSequence m(xorder);
    for (int n = 1; n <= xorder; ++n) m.at(n) = M.coeff(n);
    const CumulantSequence from_m = free_cumulants_from_moments(m, xorder);
    for (int k = 1; k <= xorder; ++k)
        record(rep, k, from_m.at(k), sum.at(k), "cumulant additivity");
    return rep;
}

namespace {

void require_unit_weights(const WeightPair& w, const char* who) {
    if (w.alpha + w.beta != 1)
        throw domain_error(std::string(who) + ": requires alpha + beta = 1");
}

FreeFamily meixner_component_family(const MeixnerParams& params, const WeightPair& w, int order) {
    return FreeFamily{{component_cumulants(params, w.alpha, order),
                       component_cumulants(params, w.beta, order)}};
}

} // namespace

VerificationReport check_linear_regression(const Rational& a, const Rational& b,
                                           const WeightPair& w, int nmax) {
    require_unit_weights(w, "check_linear_regression");
    if (nmax < 0) throw argument_error("check_linear_regression: nmax must be nonnegative");
    VerificationReport rep;
    rep.claim = "regression";
    rep.params = {{"a", a}, {"b", b}, {"alpha", w.alpha}, {"beta", w.beta}};
    rep.order_lo = 0;
    rep.order_hi = nmax;

    const int order = nmax + 1;
    const MeixnerParams params(a, b);
    const FreeFamily family = meixner_component_family(params, w, order);
    const TruncatedSeries M = convolution_moment_series(a, b, w, order);
    const LinearCombo X = combo2(1, 0);
    const LinearCombo sum = combo2(1, 1);
    for (int n = 0; n <= nmax; ++n) {
        Word word;
        word.letters.push_back(X);
        for (int i = 0; i < n; ++i) word.letters.push_back(sum);
        record(rep, n, mixed_free_moment(family, word), w.alpha * M.coeff(n + 1));
    }
    return rep;
}

namespace {

VerificationReport thm31_forward_impl(const Rational& a, const Rational& b, const WeightPair& w,
                                      int nmax, const Rational& rhs_a, bool internals) {
    require_unit_weights(w, "check_theorem31_forward");
    if (b == -1)
        throw domain_error("check_theorem31_forward: b = -1 divides by (b+1)^2");
    if (nmax < 0) throw argument_error("check_theorem31_forward: nmax must be nonnegative");
    VerificationReport rep;
    rep.claim = "thm31-forward";
    rep.params = {{"a", a}, {"b", b}, {"alpha", w.alpha}, {"beta", w.beta}};
    rep.order_lo = 0;
    rep.order_hi = nmax;

    const int order = nmax + 3;
    const MeixnerParams params(a, b);
    const FreeFamily family = meixner_component_family(params, w, order);
    const CumulantSequence R = cumulant_sequence(params, order); // cumulants of X+Y
    const TruncatedSeries M = convolution_moment_series(a, b, w, order);
    const Rational ab = w.alpha * w.beta;
    const Rational bp1sq = (b + 1) * (b + 1);
    const LinearCombo outer = combo2(w.beta, -w.alpha); // beta X - alpha Y
    const LinearCombo sum = combo2(1, 1);

    for (int n = 0; n <= nmax; ++n) {
        const Rational lhs = mixed_free_moment(family, sandwich_word(outer, sum, n));
        const Rational poly = rhs_a * b * 2 * M.coeff(n + 2) + b * b * M.coeff(n + 3) +
                              (b + rhs_a * rhs_a) * M.coeff(n + 1) + rhs_a * M.coeff(n);
        record(rep, n, lhs, ab / bp1sq * poly);
        if (internals) {
            const Rational c3 = ckn(R, 3, n);
            record(rep, n, lhs, ab * c3, "LHS = alpha*beta*c3");
            const Rational true_poly = a * b * 2 * M.coeff(n + 2) + b * b * M.coeff(n + 3) +
                                       (b + a * a) * M.coeff(n + 1) + a * M.coeff(n);
            record(rep, n, true_poly, bp1sq * c3, "moment form = (b+1)^2*c3");
            if (a == 0 && b == 0) record(rep, n, lhs, Rational(0), "semicircle zero");
        }
    }
    return rep;
}

} // namespace

VerificationReport check_theorem31_forward(const Rational& a, const Rational& b,
                                           const WeightPair& w, int nmax) {
    return thm31_forward_impl(a, b, w, nmax, a, true);
}

VerificationReport check_theorem31_forward_perturbed(const Rational& a, const Rational& b,
                                                     const WeightPair& w, int nmax) {
    VerificationReport rep = thm31_forward_impl(a, b, w, nmax, a + 1, false);
    rep.claim = "thm31-forward-perturbed";
    rep.notes.push_back("negative control: RHS polynomial built from a+1; expected to fail");
    return rep;
}

std::pair<MomentSequence, VerificationReport>
recover_moments_from_identity(const Rational& a, const Rational& b, int order) {
    if (b < -1 || b == -1)
        throw domain_error("recover_moments_from_identity: requires b > -1");
    if (b == Rational(-1, 2))
        throw degenerate_branch_error(
            "recover_moments_from_identity: b = -1/2 is degenerate — the linear step "
            "coefficient -(2b+1) vanishes and the rejected factor collapses to the Dirac "
            "mass at " +
            to_fraction_string(-2 * a));
    if (order < 3) throw argument_error("recover_moments_from_identity: order must be >= 3");
    if (order > enumeration_caps().noncrossing)
        throw resource_limit_error("recover_moments_from_identity: order exceeds the "
                                   "non-crossing enumeration cap");

    VerificationReport rep;
    rep.claim = "thm31-converse";
    rep.params = {{"a", a}, {"b", b}};
    rep.order_lo = 1;
    rep.order_hi = order;

    // m and R grown together; the step for m_{n+3} is linear with coefficient
    // b^2 - (b+1)^2 = -(2b+1) because c^(3)_n sees m_{n+3} only through the
    // full-block cumulant R_{n+3} = m_{n+3} - (known NC terms).
    MomentSequence m(order);
    CumulantSequence R(order);
    m.at(1) = Rational(0);
    m.at(2) = Rational(1);
    R.at(1) = Rational(0);
    R.at(2) = Rational(1);
    const Rational bp1sq = (b + 1) * (b + 1);
    auto m_at = [&](int i) { return i == 0 ? Rational(1) : m.at(i); };
    for (int n = 0; n + 3 <= order; ++n) {
        const int top = n + 3;
        // known = sum over NC(top) minus the full block, with R_1..R_{top-1}
        Rational known_nc(0);
        for (const auto& [profile, count] : nc_profile_histogram(top)) {
            if (profile.front() == top) continue;
            Rational prod(1);
            for (int sz : profile) {
                prod *= R.at(sz);
                if (prod == 0) break;
            }
            if (prod != 0) known_nc += count * prod;
        }
        // c3_partial = sum over NC^3(top) minus the full block
        Rational c3_partial(0);
        for (const auto& [profile, count] : ncfb_profile_histogram(3, top)) {
            if (profile.front() == top) continue;
            Rational prod(1);
            for (int sz : profile) {
                prod *= R.at(sz);
                if (prod == 0) break;
            }
            if (prod != 0) c3_partial += count * prod;
        }
        // b^2 x + 2ba m_{n+2} + (b+a^2) m_{n+1} + a m_n
        //   = (b+1)^2 ((x - known_nc) + c3_partial)
        const Rational rhs_const = bp1sq * (c3_partial - known_nc);
        const Rational lhs_lower =
            2 * b * a * m_at(n + 2) + (b + a * a) * m_at(n + 1) + a * m_at(n);
        m.at(top) = (rhs_const - lhs_lower) / (b * b - bp1sq);
        R.at(top) = m.at(top) - known_nc;
    }

    // recovered jet solves the quadratic
    TruncatedSeries M(order);
    M.coeff(0) = Rational(1);
    for (int i = 1; i <= order; ++i) M.coeff(i) = m.at(i);
    TruncatedSeries quad(order);
    quad.coeff(0) = b;
    quad.coeff(1) = a;
    quad.coeff(2) = Rational(1);
    TruncatedSeries lin(order);
    lin.coeff(0) = 1 + 2 * b;
    lin.coeff(1) = a;
    TruncatedSeries residual = series_mul(quad, series_mul(M, M));
    residual = series_sub(residual, series_mul(lin, M));
    residual = series_add(residual, TruncatedSeries::constant(1 + b, order));
    for (int i = 0; i <= order; ++i)
        record(rep, i, residual.coeff(i), Rational(0), "quadratic residual");

    // and matches the forward construction
    const Rational half(1, 2);
    TruncatedSeries forward(order);
    if (b >= -half) {
        forward = convolution_moment_series(a, b, WeightPair(half, half), order);
    } else {
        forward = moment_series(MeixnerParams(a, b), order);
        rep.notes.push_back("b < -1/2 admits no weight pair; compared against the mu_{a,b} jet");
    }
    for (int i = 0; i <= order; ++i)
        record(rep, i, M.coeff(i), forward.coeff(i), "matches forward moments");
    return {std::move(m), std::move(rep)};
}

VerificationReport check_prop34(const Rational& a, const Rational& b, const Rational& t,
                                const Rational& s, int nmax) {
    if (!(0 < t && t < s)) throw argument_error("check_prop34: requires 0 < t < s");
    if (b < 0)
        throw domain_error("check_prop34: requires b >= 0 (the Levy-process model needs an "
                           "infinitely divisible law, which holds iff b >= 0)");
    if (nmax < 0) throw argument_error("check_prop34: nmax must be nonnegative");
    VerificationReport rep;
    rep.claim = "prop34";
    rep.params = {{"a", a}, {"b", b}, {"t", t}, {"s", s}};
    rep.order_lo = 0;
    rep.order_hi = nmax;

    const int order = nmax + 3;
    const MeixnerParams params(a, b);
    const CumulantSequence base = cumulant_sequence(params, order);
    // increments are free with cumulants linear in the variance span
    const FreeFamily family{{sequence_scale(base, t), sequence_scale(base, s - t)}};
    const MomentSequence mh = moment_sequence_from_free_cumulants(sequence_scale(base, s), order);
    auto mh_at = [&](int i) { return i == 0 ? Rational(1) : mh.at(i); };

    const LinearCombo Xt = combo2(1, 0);
    const LinearCombo Xs = combo2(1, 1);
    const LinearCombo tXs_minus_sXt = combo2(t - s, t);
    const Rational bracket_base = (s - t) * t;
    const Rational bpssq = (b + s) * (b + s);
    for (int n = 0; n <= nmax; ++n) {
        const Rational bracket = b * b * mh_at(n + 3) + 2 * b * a * s * mh_at(n + 2) +
                                 (b + a * a) * s * s * mh_at(n + 1) + a * s * s * s * mh_at(n);
        const Rational lhs = mixed_free_moment(family, sandwich_word(Xt, Xs, n));
        const Rational rhs =
            bracket_base / (s * s * bpssq) * bracket + t * t / (s * s) * mh_at(n + 3);
        record(rep, n, lhs, rhs);

        const Rational lhs2 = mixed_free_moment(family, sandwich_word(tXs_minus_sXt, Xs, n));
        record(rep, n, lhs2, bracket_base / bpssq * bracket, "non-normalized form");
    }
    return rep;
}

VerificationReport check_prop36(const Rational& a, const Rational& b, const Rational& t,
                                int nmax) {
    if (t <= 0) throw argument_error("check_prop36: requires t > 0");
    if (b < 0)
        throw domain_error("check_prop36: requires b >= 0 (infinitely divisible increments)");
    if (nmax < 0) throw argument_error("check_prop36: nmax must be nonnegative");
    VerificationReport rep;
    rep.claim = "prop36";
    rep.params = {{"a", a}, {"b", b}, {"t", t}};
    rep.order_lo = 0;
    rep.order_hi = nmax;

    const int order = nmax + 4;
    const MeixnerParams params(a, b);
    const CumulantSequence base = cumulant_sequence(params, order);
    const FreeFamily family{{sequence_scale(base, t), sequence_scale(base, t)}};
    const MomentSequence mh =
        moment_sequence_from_free_cumulants(sequence_scale(base, 2 * t), order);
    auto mh_at = [&](int i) { return i == 0 ? Rational(1) : mh.at(i); };

    const LinearCombo Xt = combo2(1, 0);
    const LinearCombo X2t = combo2(1, 1);
    const LinearCombo centered = combo2(1, -1); // 2 X_t - X_{2t}

    // (i) vanishing third conditional central moment, at trace level
    for (int k = 0; k <= nmax; ++k) {
        Word w;
        w.letters = {centered, centered, centered};
        for (int i = 0; i < k; ++i) w.letters.push_back(X2t);
        record(rep, k, mixed_free_moment(family, w), Rational(0), "third central moment");
    }

    const Rational b2t = b + 2 * t;
    for (int n = 0; n <= nmax; ++n) {
        Word cube;
        cube.letters = {Xt, Xt, Xt};
        for (int i = 0; i < n; ++i) cube.letters.push_back(X2t);
        const Rational lhs = mixed_free_moment(family, cube);
        const Rational rhs =
            (b * b * mh_at(n + 3) + 4 * b * a * t * mh_at(n + 2) +
             4 * (b + a * a) * t * t * mh_at(n + 1) + 8 * a * t * t * t * mh_at(n)) /
                (8 * b2t * b2t) +
            mh_at(n + 3) / 8 +
            (4 * t * t * mh_at(n + 1) + 2 * t * a * mh_at(n + 2) + b * mh_at(n + 3)) / (4 * b2t);
        record(rep, n, lhs, rhs, "cubic polynomial form");

        // rearranged identity, every mixed moment from enumeration:
        // 8 tau(Xt^3 X^n) = 8 tau(Xt^2 X^{n+1}) + 4 tau(Xt X Xt X^n) - 2 m_{n+3}
        Word sq;
        sq.letters = {Xt, Xt};
        for (int i = 0; i < n + 1; ++i) sq.letters.push_back(X2t);
        const Rational rhs2 = 8 * mixed_free_moment(family, sq) +
                              4 * mixed_free_moment(family, sandwich_word(Xt, X2t, n)) -
                              2 * mh_at(n + 3);
        record(rep, n, 8 * lhs, rhs2, "rearranged third-central-moment identity");
    }
    return rep;
}

namespace {

void require_q_in_range(const Rational& q, const char* who) {
    if (q <= -1 || q >= 1) throw domain_error(std::string(who) + ": requires -1 < q < 1");
}

} // namespace

VerificationReport check_qgaussian_forward(const Rational& q, int nmax) {
    require_q_in_range(q, "check_qgaussian_forward");
    if (nmax < 0) throw argument_error("check_qgaussian_forward: nmax must be nonnegative");
    VerificationReport rep;
    rep.claim = "qgauss-forward";
    rep.params = {{"q", q}};
    rep.order_lo = 0;
    rep.order_hi = nmax;

    const QGaussianFamily fam(q, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    const LinearCombo diff = combo2(1, -1);
    const LinearCombo sum = combo2(1, 1);
    for (int n = 0; n <= nmax; ++n) {
        const Rational lhs = q_wick_moment(fam, sandwich_word(diff, sum, n));
        const Rational rhs = 2 * q * q_wick_moment(fam, power_word(sum, n + 1));
        record(rep, n, lhs, rhs);
    }
    return rep;
}

VerificationReport check_qgaussian_forward_injected(const Rational& q, int nmax) {
    require_q_in_range(q, "check_qgaussian_forward_injected");
    VerificationReport rep;
    rep.claim = "qgauss-forward-injected";
    rep.params = {{"q", q}};
    rep.order_lo = 0;
    rep.order_hi = nmax;
    rep.notes.push_back("negative control: fourth q-cumulant 1 injected; expected to fail");

    const int order = nmax + 3;
    CumulantSequence rq(order);
    rq.at(2) = Rational(1);
    if (order >= 4) rq.at(4) = Rational(1);
    const QFamily fam(q, {rq, rq});
    const LinearCombo diff = combo2(1, -1);
    const LinearCombo sum = combo2(1, 1);
    for (int n = 0; n <= nmax; ++n) {
        const Rational lhs = mixed_q_moment(fam, sandwich_word(diff, sum, n));
        const Rational rhs = 2 * q * mixed_q_moment(fam, power_word(sum, n + 1));
        record(rep, n, lhs, rhs);
    }
    return rep;
}

std::pair<CumulantSequence, VerificationReport>
recover_q_cumulants_from_identity(const Rational& q, int order) {
    require_q_in_range(q, "recover_q_cumulants_from_identity");
    if (order < 3) throw argument_error("recover_q_cumulants_from_identity: order must be >= 3");
    VerificationReport rep;
    rep.claim = "qgauss-converse";
    rep.params = {{"q", q}};
    rep.order_lo = 3;
    rep.order_hi = order;

    // Single-generator cumulants, both generators identically distributed.
    // rq_1 = 0, rq_2 = 1 are given; each longer word solves for the next one.
    CumulantSequence rq(order);
    rq.at(2) = Rational(1);
    const LinearCombo diff = combo2(1, -1);
    const LinearCombo sum = combo2(1, 1);
    for (int len = 3; len <= order; ++len) {
        CumulantSequence prefix(len);
        for (int k = 1; k < len; ++k) prefix.at(k) = rq.at(k);
        const QFamily fam(q, {prefix, prefix});
        const Rational partial =
            mixed_q_moment_without_full_block(fam, sandwich_word(diff, sum, len - 3));
        // E((G_f+G_g)^{len-2}) only sees sum-cumulants below the unknown
        CumulantSequence sum_prefix(len - 2);
        for (int k = 1; k <= len - 2; ++k) sum_prefix.at(k) = 2 * rq.at(k);
        const Rational rhs = 2 * q * q_moments_from_cumulants(sum_prefix, len - 2, q);
        // full block enters with weight q^0 and coefficient 2 (both generator
        // coefficient products along the word equal 1)
        const Rational solved = (rhs - partial) / 2;
        record(rep, len, solved, Rational(0), "solved q-cumulant must vanish");
        rq.at(len) = solved;
    }

    CumulantSequence sum_cumulants(order);
    for (int k = 1; k <= order; ++k) sum_cumulants.at(k) = 2 * rq.at(k);
    return {std::move(sum_cumulants), std::move(rep)};
}

} // namespace freeprob
