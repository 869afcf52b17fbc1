#pragma once

#include <vector>

#include "freeprob/enumerate.hpp"
#include "freeprob/sequences.hpp"

namespace freeprob {

/// m_n = sum over NC(n) of prod_B R_{|B|}. Pre: 1 <= n <= order of R.
Rational moments_from_free_cumulants(const CumulantSequence& R, int n);

/// Convenience: the full moment sequence up to `order`.
MomentSequence moment_sequence_from_free_cumulants(const CumulantSequence& R, int order);

/// Inverse transform, peeling the full-block term:
///   R_n = m_n - sum_{nu in NC(n), nu != full} prod R_{|B|}.
CumulantSequence free_cumulants_from_moments(const MomentSequence& m, int order);

/// c^k_n = sum over NC^k(n+k) of prod_B R_{|B|}.
/// Pre: k >= 1, n >= 0, n + k within the non-crossing cap.
Rational ckn(const CumulantSequence& R, int k, int n);

/// Linear combination of generators: coefficient vector, one entry per
/// generator of the family it is evaluated against.
using LinearCombo = std::vector<Rational>;

/// Word of linear combinations, e.g. (bX - aY)(X+Y)(bX - aY)(X+Y)^n.
struct Word {
    std::vector<LinearCombo> letters;

    int length() const { return static_cast<int>(letters.size()); }
};

/// Family of freely independent generators, each given by its cumulant
/// sequence. Freeness is encoded by evaluation: mixed (non-monochromatic)
/// cumulants across generators vanish.
struct FreeFamily {
    std::vector<CumulantSequence> generators;

    int generator_count() const { return static_cast<int>(generators.size()); }
    int order() const;
};

/// R_k(args_1, ..., args_k) for linear combinations of free generators:
/// by multilinearity and vanishing of mixed cumulants this is
///   sum_j (prod_i coeff_j(args_i)) R_k(generator j).
Rational mixed_free_cumulant(const FreeFamily& family, const std::vector<LinearCombo>& args);

/// tau(w_1 w_2 ... w_n) = sum over NC(n) of prod_B R_|B|(letters in B).
Rational mixed_free_moment(const FreeFamily& family, const Word& w);

/// Family of q-independent generators given by q-cumulant sequences,
/// with deformation parameter -1 < q < 1.
struct QFamily {
    Rational q;
    std::vector<CumulantSequence> generators;

    QFamily(Rational q_, std::vector<CumulantSequence> gens);
    int generator_count() const { return static_cast<int>(generators.size()); }
    int order() const;
};

/// q-Gaussian family in covariance form: C_ij = <f_i, f_j>, symmetric with
/// nonnegative diagonal; -1 < q < 1.
struct QGaussianFamily {
    Rational q;
    std::vector<std::vector<Rational>> covariance;

    QGaussianFamily(Rational q_, std::vector<std::vector<Rational>> cov);
    int generator_count() const { return static_cast<int>(covariance.size()); }
};

/// E(Z^n) for a single variable with q-cumulants Rq:
///   sum over all partitions sigma of q^{rc(sigma)} prod_B Rq_{|B|}.
Rational q_moments_from_cumulants(const CumulantSequence& Rq, int n, const Rational& q);

/// Inverse of the above; the full-block term carries weight q^0 = 1.
CumulantSequence q_cumulants_from_moments(const MomentSequence& m, int order, const Rational& q);

/// Wick formula: 0 for odd length, otherwise
///   sum over pair partitions of q^{rc} prod_{pairs {i,j}} C_{idx(i), idx(j)}.
Rational q_wick_moment(const QGaussianFamily& fam, const std::vector<int>& idx);

/// Wick formula for words of linear combinations of the generators; the pair
/// weight is the bilinear form <v_i, C v_j>.
Rational q_wick_moment(const QGaussianFamily& fam, const Word& w);

/// E(w_1 ... w_n) over all partitions with weight q^{rc}; blocks evaluate by
/// the monochromatic rule (mixed q-cumulants vanish by q-independence).
Rational mixed_q_moment(const QFamily& fam, const Word& w);

/// Same sum with the one-block partition left out; the verification module's
/// inductive converse solves for the full-block cumulant against this.
Rational mixed_q_moment_without_full_block(const QFamily& fam, const Word& w);

} // namespace freeprob
