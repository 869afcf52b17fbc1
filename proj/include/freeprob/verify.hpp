#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "freeprob/cumulants.hpp"
#include "freeprob/meixner.hpp"

namespace freeprob {

/// One exact mismatch: the running index (order/word exponent) and both sides
/// as exact fractions.
struct VerificationFailure {
    int n = 0;
    Rational lhs;
    Rational rhs;
    std::string label; // which sub-identity, when a check bundles several
};

/// Structured outcome of one machine check. All conditional-expectation
/// statements are verified at the level of traces against powers, so every
/// row is an exact rational equality; nothing is ever compared with a
/// tolerance.
struct VerificationReport {
    std::string claim;
    std::map<std::string, Rational> params;
    int order_lo = 0;
    int order_hi = 0;
    std::vector<VerificationFailure> failures;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
};

/// {"claim", "params", "orders": [lo,hi], "verdict": "pass"|"fail",
///  "failures": [{"n", "lhs", "rhs"}], "notes": [...]}  — keys sorted,
/// fractions canonical, so output bytes are deterministic.
nlohmann::json report_to_json(const VerificationReport& report);

/// Flat rows "claim,param-key,order,verdict,lhs,rhs" (one per failure, or a
/// single summary row when the report passes).
std::vector<std::string> report_to_csv_rows(const VerificationReport& report);

/// Partition-sum recursion for NC^k: for all 1 <= k <= kmax, 1 <= n <= nmax,
///   c^k_n = sum_{i=0}^{n-1} m_i c^{k+1}_{n-1-i} + R_k m_n
/// with m the moments of R. Holds for arbitrary cumulant sequences.
VerificationReport check_lemma22(const CumulantSequence& R, int kmax, int nmax);

/// Generating-function ladder C^(k)(z) = M(z) C^(k+1)(z) + R_k z^k M(z) as an
/// exact jet identity for k <= kmax, plus the k = 1 specializations
/// C^(1) = M - 1 and 1/M = 1 - C^(2) - R_1 z.
VerificationReport check_series_ladder(const CumulantSequence& R, int kmax, int order);

/// The convolution jet solves its quadratic exactly (residual is the zero
/// jet), and its cumulants are the entrywise sum of the two component
/// cumulant sequences (additivity under free convolution).
VerificationReport check_convolution_quadratic(const Rational& a, const Rational& b,
                                               const WeightPair& w, int order);

/// Linear regression of a component on the sum:
///   tau(X (X+Y)^n) = alpha tau((X+Y)^{n+1})  for 0 <= n <= nmax.
VerificationReport check_linear_regression(const Rational& a, const Rational& b,
                                           const WeightPair& w, int nmax);

/// Cubic conditional-moment identity for the Meixner components: for
/// 0 <= n <= nmax, with m the moments of X+Y,
///   tau((bX-aY)(X+Y)(bX-aY)(X+Y)^n)
///     = ab/(b+1)^2 (b^2 m_{n+3} + 2ba m_{n+2} + (b+a^2) m_{n+1} + a m_n),
/// together with both internal forms: LHS = alpha beta c^(3)_n and
/// b^2 m_{n+3} + 2ba m_{n+2} + (b+a^2) m_{n+1} + a m_n = (b+1)^2 c^(3)_n.
VerificationReport check_theorem31_forward(const Rational& a, const Rational& b,
                                           const WeightPair& w, int nmax);

/// Negative control: same check with the RHS polynomial built from a+1
/// instead of a. Must fail whenever b != -1/2.
VerificationReport check_theorem31_forward_perturbed(const Rational& a, const Rational& b,
                                                     const WeightPair& w, int nmax);

/// Converse direction: starting from m_1 = 0, m_2 = 1, solves
///   b^2 m_{n+3} + 2ba m_{n+2} + (b+a^2) m_{n+1} + a m_n = (b+1)^2 c^(3)_n
/// for m_{n+3} (linear step with coefficient -(2b+1)) and verifies the
/// recovered jet solves the convolution quadratic and matches the forward
/// construction. b = -1/2 is the degenerate branch (Dirac mass at -2a).
std::pair<MomentSequence, VerificationReport>
recover_moments_from_identity(const Rational& a, const Rational& b, int order);

/// Free Levy increments: with variances t and s - t and m the moments of X_s,
///   tau(X_t X_s X_t X_s^n)
///     = (s-t)t/(s^2(b+s)^2) (b^2 m_{n+3} + 2bas m_{n+2}
///        + (b+a^2)s^2 m_{n+1} + as^3 m_n) + (t^2/s^2) m_{n+3},
/// plus the non-normalized form for tau((tX_s - sX_t) X_s (tX_s - sX_t) X_s^n).
VerificationReport check_prop34(const Rational& a, const Rational& b, const Rational& t,
                                const Rational& s, int nmax);

/// Cubic conditional moment of X_t against X_{2t}:
/// (i)  tau((2X_t - X_{2t})^3 X_{2t}^k) = 0 for k <= nmax, and
/// (ii) tau(X_t^3 X_{2t}^n) equals the explicit cubic polynomial expansion,
/// plus the rearranged third-central-moment identity with all mixed moments
/// from enumeration.
VerificationReport check_prop36(const Rational& a, const Rational& b, const Rational& t,
                                int nmax);

/// q-Gaussian Wick check with orthonormal f, g: for 0 <= n <= nmax,
///   E((G_f-G_g)(G_f+G_g)(G_f-G_g)(G_f+G_g)^n) = 2q E((G_f+G_g)^{n+1}).
VerificationReport check_qgaussian_forward(const Rational& q, int nmax);

/// Negative control: the same identity evaluated through q-cumulants with a
/// fourth cumulant of 1 injected into both generators. Must fail.
VerificationReport check_qgaussian_forward_injected(const Rational& q, int nmax);

/// Converse by induction on the cumulant length: assuming Rq_1 = 0 and
/// Rq_2(G_f+G_g) = 2, solves each higher cumulant of G_f+G_g from the
/// identity and verifies it vanishes. Returns the recovered sum-cumulant
/// sequence (2 at order 2, 0 elsewhere when the induction closes).
std::pair<CumulantSequence, VerificationReport>
recover_q_cumulants_from_identity(const Rational& q, int order);

} // namespace freeprob
