#include "freeprob/cumulants.hpp"

namespace freeprob {

namespace {

Rational profile_product(const CumulantSequence& R, const BlockProfile& sizes) {
    Rational prod(1);
    for (int s : sizes) {
        if (s > R.order()) throw argument_error("cumulant sequence too short for block size");
        prod *= R.at(s);
        if (prod == 0) break;
    }
    return prod;
}

} // namespace

Rational moments_from_free_cumulants(const CumulantSequence& R, int n) {
    if (n < 1 || n > R.order())
        throw argument_error("moments_from_free_cumulants: n out of range of R");
    Rational total(0);
    for (const auto& [profile, count] : nc_profile_histogram(n)) {
        const Rational prod = profile_product(R, profile);
        if (prod != 0) total += count * prod;
    }
    return total;
}

MomentSequence moment_sequence_from_free_cumulants(const CumulantSequence& R, int order) {
    MomentSequence m(order);
    for (int n = 1; n <= order; ++n) m.at(n) = moments_from_free_cumulants(R, n);
    return m;
}

CumulantSequence free_cumulants_from_moments(const MomentSequence& m, int order) {
    if (order > m.order()) throw argument_error("free_cumulants_from_moments: order exceeds m");
    CumulantSequence R(order);
    for (int n = 1; n <= order; ++n) {
        // all non-full-block profiles only touch R_1..R_{n-1}, already known
        Rational partial(0);
        for (const auto& [profile, count] : nc_profile_histogram(n)) {
            if (profile.front() == n) continue;
            const Rational prod = profile_product(R, profile);
            if (prod != 0) partial += count * prod;
        }
        R.at(n) = m.at(n) - partial;
    }
    return R;
}

Rational ckn(const CumulantSequence& R, int k, int n) {
    if (k < 1) throw argument_error("ckn: k must be positive");
    if (n < 0) throw argument_error("ckn: n must be nonnegative");
    if (n + k > R.order()) throw argument_error("ckn: n + k exceeds order of R");
    Rational total(0);
    for (const auto& [profile, count] : ncfb_profile_histogram(k, n + k)) {
        const Rational prod = profile_product(R, profile);
        if (prod != 0) total += count * prod;
    }
    return total;
}

int FreeFamily::order() const {
    if (generators.empty()) throw argument_error("FreeFamily: no generators");
    const int ord = generators.front().order();
    for (const auto& g : generators)
        if (g.order() != ord) throw argument_error("FreeFamily: generator orders differ");
    return ord;
}

namespace {

// Monochromatic block value shared by the free and q-deformed word sums:
//   sum_j (prod_{i in block} letter_i[j]) * R_{|block|}(generator j).
template <class Gens>
Rational block_cumulant(const Gens& generators, const std::vector<LinearCombo>& letters,
                        const std::vector<int>& block) {
    const int k = static_cast<int>(block.size());
    Rational value(0);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        Rational coeff(1);
        for (int pos : block) {
            coeff *= letters[static_cast<std::size_t>(pos - 1)][g];
            if (coeff == 0) break;
        }
        if (coeff != 0) value += coeff * generators[g].at(k);
    }
    return value;
}

void check_word(int generator_count, int order, const Word& w, const char* who) {
    if (w.length() < 1) throw argument_error(std::string(who) + ": empty word");
    if (w.length() > order)
        throw argument_error(std::string(who) + ": word longer than the family order");
    for (const auto& letter : w.letters)
        if (static_cast<int>(letter.size()) != generator_count)
            throw argument_error(std::string(who) + ": letter arity != generator count");
}

} // namespace

Rational mixed_free_cumulant(const FreeFamily& family, const std::vector<LinearCombo>& args) {
    const int k = static_cast<int>(args.size());
    if (k < 1) throw argument_error("mixed_free_cumulant: needs at least one argument");
    if (k > family.order()) throw argument_error("mixed_free_cumulant: length exceeds order");
    for (const auto& arg : args)
        if (static_cast<int>(arg.size()) != family.generator_count())
            throw argument_error("mixed_free_cumulant: argument arity != generator count");
    std::vector<int> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return block_cumulant(family.generators, args, all);
}

Rational mixed_free_moment(const FreeFamily& family, const Word& w) {
    check_word(family.generator_count(), family.order(), w, "mixed_free_moment");
    Rational total(0);
    for_each_noncrossing(w.length(), [&](const SetPartition& p) {
        Rational prod(1);
        for (const auto& block : p.blocks) {
            prod *= block_cumulant(family.generators, w.letters, block);
            if (prod == 0) return;
        }
        total += prod;
    });
    return total;
}

QFamily::QFamily(Rational q_, std::vector<CumulantSequence> gens)
    : q(std::move(q_)), generators(std::move(gens)) {
    if (q <= -1 || q >= 1) throw domain_error("QFamily: requires -1 < q < 1");
}

int QFamily::order() const {
    if (generators.empty()) throw argument_error("QFamily: no generators");
    const int ord = generators.front().order();
    for (const auto& g : generators)
        if (g.order() != ord) throw argument_error("QFamily: generator orders differ");
    return ord;
}

QGaussianFamily::QGaussianFamily(Rational q_, std::vector<std::vector<Rational>> cov)
    : q(std::move(q_)), covariance(std::move(cov)) {
    if (q <= -1 || q >= 1) throw domain_error("QGaussianFamily: requires -1 < q < 1");
    const std::size_t n = covariance.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (covariance[i].size() != n)
            throw argument_error("QGaussianFamily: covariance must be square");
        if (covariance[i][i] < 0)
            throw argument_error("QGaussianFamily: negative diagonal entry");
        for (std::size_t j = 0; j < i; ++j)
            if (covariance[i][j] != covariance[j][i])
                throw argument_error("QGaussianFamily: covariance must be symmetric");
    }
}

Rational q_moments_from_cumulants(const CumulantSequence& Rq, int n, const Rational& q) {
    if (n < 1 || n > Rq.order())
        throw argument_error("q_moments_from_cumulants: n out of range of Rq");
    Rational total(0);
    std::vector<Rational> qpow{Rational(1)};
    for (const auto& [key, count] : partition_rc_histogram(n)) {
        const auto& [rc, profile] = key;
        const Rational prod = profile_product(Rq, profile);
        if (prod == 0) continue;
        while (static_cast<int>(qpow.size()) <= rc) qpow.push_back(qpow.back() * q);
        total += count * qpow[static_cast<std::size_t>(rc)] * prod;
    }
    return total;
}

CumulantSequence q_cumulants_from_moments(const MomentSequence& m, int order, const Rational& q) {
    if (order > m.order()) throw argument_error("q_cumulants_from_moments: order exceeds m");
    CumulantSequence Rq(order);
    for (int n = 1; n <= order; ++n) {
        Rational partial(0);
        std::vector<Rational> qpow{Rational(1)};
        for (const auto& [key, count] : partition_rc_histogram(n)) {
            const auto& [rc, profile] = key;
            if (profile.front() == n) continue; // the full block has rc = 0, weight 1
            const Rational prod = profile_product(Rq, profile);
            if (prod == 0) continue;
            while (static_cast<int>(qpow.size()) <= rc) qpow.push_back(qpow.back() * q);
            partial += count * qpow[static_cast<std::size_t>(rc)] * prod;
        }
        Rq.at(n) = m.at(n) - partial;
    }
    return Rq;
}

Rational q_wick_moment(const QGaussianFamily& fam, const std::vector<int>& idx) {
    Word w;
    w.letters.reserve(idx.size());
    for (int g : idx) {
        if (g < 0 || g >= fam.generator_count())
            throw argument_error("q_wick_moment: generator index out of range");
        LinearCombo combo(static_cast<std::size_t>(fam.generator_count()), Rational(0));
        combo[static_cast<std::size_t>(g)] = Rational(1);
        w.letters.push_back(std::move(combo));
    }
    return q_wick_moment(fam, w);
}

Rational q_wick_moment(const QGaussianFamily& fam, const Word& w) {
    const int n = w.length();
    if (n < 1) throw argument_error("q_wick_moment: empty word");
    for (const auto& letter : w.letters)
        if (static_cast<int>(letter.size()) != fam.generator_count())
            throw argument_error("q_wick_moment: letter arity != generator count");
    if (n % 2 != 0) return Rational(0);

    // pair weights <v_i, C v_j>
    std::vector<std::vector<Rational>> ip(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational v(0);
            for (int x = 0; x < fam.generator_count(); ++x) {
                if (w.letters[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] == 0)
                    continue;
                for (int y = 0; y < fam.generator_count(); ++y)
                    v += w.letters[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] *
                         fam.covariance[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
                         w.letters[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)];
            }
            ip[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            ip[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }

    Rational total(0);
    std::vector<Rational> qpow{Rational(1)};
    for_each_pairing(n, [&](const SetPartition& p) {
        Rational prod(1);
        for (const auto& pair : p.blocks) {
            prod *= ip[static_cast<std::size_t>(pair[0] - 1)][static_cast<std::size_t>(pair[1] - 1)];
            if (prod == 0) return;
        }
        const int rc = restricted_crossings(p);
        while (static_cast<int>(qpow.size()) <= rc) qpow.push_back(qpow.back() * fam.q);
        total += qpow[static_cast<std::size_t>(rc)] * prod;
    });
    return total;
}

namespace {

Rational q_partition_sum(const QFamily& fam, const Word& w, bool skip_full_block) {
    Rational total(0);
    std::vector<Rational> qpow{Rational(1)};
    for_each_partition(w.length(), [&](const SetPartition& p) {
        if (skip_full_block && p.block_count() == 1) return;
        Rational prod(1);
        for (const auto& block : p.blocks) {
            prod *= block_cumulant(fam.generators, w.letters, block);
            if (prod == 0) return;
        }
        const int rc = restricted_crossings(p);
        while (static_cast<int>(qpow.size()) <= rc) qpow.push_back(qpow.back() * fam.q);
        total += qpow[static_cast<std::size_t>(rc)] * prod;
    });
    return total;
}

} // namespace

Rational mixed_q_moment(const QFamily& fam, const Word& w) {
    check_word(fam.generator_count(), fam.order(), w, "mixed_q_moment");
    return q_partition_sum(fam, w, false);
}

Rational mixed_q_moment_without_full_block(const QFamily& fam, const Word& w) {
    check_word(fam.generator_count(), fam.order(), w, "mixed_q_moment_without_full_block");
    return q_partition_sum(fam, w, true);
}

} // namespace freeprob
