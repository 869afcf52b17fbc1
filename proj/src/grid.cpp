#include "freeprob/grid.hpp"

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

namespace freeprob {

namespace {

Rational small_fraction(std::mt19937_64& gen) {
    const long long num = static_cast<long long>(gen() % 19) - 9;
    const long long den = static_cast<long long>(gen() % 9) + 1;
    return make_rational(num, den);
}

} // namespace

CumulantSequence random_cumulant_sequence(std::uint64_t seed, int order) {
    std::mt19937_64 gen(seed);
    CumulantSequence R(order);
    for (int k = 1; k <= order; ++k) R.at(k) = small_fraction(gen);
    return R;
}

MomentSequence random_moment_sequence(std::uint64_t seed, int order) {
    std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
    MomentSequence m(order);
    for (int k = 1; k <= order; ++k) m.at(k) = small_fraction(gen);
    return m;
}

namespace {

Rational get_rational(const nlohmann::json& params, const char* name, const char* fallback) {
    if (!params.contains(name)) return parse_rational(fallback);
    const auto& v = params.at(name);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw argument_error(std::string("grid parameter '") + name +
                         "' must be a fraction string or integer");
}

int get_int(const nlohmann::json& params, const char* name, int fallback) {
    if (!params.contains(name)) return fallback;
    return params.at(name).get<int>();
}

CumulantSequence claim_cumulants(const nlohmann::json& params, int order,
                                 VerificationReport* annotate) {
    if (params.contains("seed")) {
        const auto seed = params.at("seed").get<std::uint64_t>();
        if (annotate) annotate->params.emplace("seed", Rational(seed));
        return random_cumulant_sequence(seed, order);
    }
    const Rational a = get_rational(params, "a", "0");
    const Rational b = get_rational(params, "b", "0");
    if (annotate) {
        annotate->params.emplace("a", a);
        annotate->params.emplace("b", b);
    }
    return cumulant_sequence(MeixnerParams(a, b), order);
}

} // namespace

VerificationReport run_claim(const std::string& claim, const nlohmann::json& params) {
    if (claim == "lemma22") {
        const int kmax = get_int(params, "kmax", 3);
        const int nmax = get_int(params, "nmax", 5);
        const int order = get_int(params, "order", kmax + nmax);
        VerificationReport annotate;
        const CumulantSequence R = claim_cumulants(params, order, &annotate);
        VerificationReport rep = check_lemma22(R, kmax, nmax);
        rep.params.insert(annotate.params.begin(), annotate.params.end());
        return rep;
    }
    if (claim == "ladder") {
        const int kmax = get_int(params, "kmax", 3);
        const int order = get_int(params, "order", 10);
        VerificationReport annotate;
        const CumulantSequence R = claim_cumulants(params, order, &annotate);
        VerificationReport rep = check_series_ladder(R, kmax, order);
        rep.params.insert(annotate.params.begin(), annotate.params.end());
        return rep;
    }
    const Rational a = get_rational(params, "a", "0");
    const Rational b = get_rational(params, "b", "0");
    if (claim == "convolution") {
        const WeightPair w(get_rational(params, "alpha", "1/2"), get_rational(params, "beta", "1/2"));
        return check_convolution_quadratic(a, b, w, get_int(params, "order", 12));
    }
    if (claim == "regression") {
        const WeightPair w(get_rational(params, "alpha", "1/2"), get_rational(params, "beta", "1/2"));
        return check_linear_regression(a, b, w, get_int(params, "nmax", 7));
    }
    if (claim == "thm31") {
        const WeightPair w(get_rational(params, "alpha", "1/2"), get_rational(params, "beta", "1/2"));
        return check_theorem31_forward(a, b, w, get_int(params, "nmax", 6));
    }
    if (claim == "thm31-perturbed") {
        const WeightPair w(get_rational(params, "alpha", "1/2"), get_rational(params, "beta", "1/2"));
        return check_theorem31_forward_perturbed(a, b, w, get_int(params, "nmax", 4));
    }
    if (claim == "qgauss-injected")
        return check_qgaussian_forward_injected(get_rational(params, "q", "1/2"),
                                                get_int(params, "nmax", 4));
    if (claim == "converse")
        return recover_moments_from_identity(a, b, get_int(params, "order", 10)).second;
    if (claim == "prop34")
        return check_prop34(a, b, get_rational(params, "t", "1"), get_rational(params, "s", "2"),
                            get_int(params, "nmax", 4));
    if (claim == "prop36")
        return check_prop36(a, b, get_rational(params, "t", "1"), get_int(params, "nmax", 5));
    if (claim == "qgauss")
        return check_qgaussian_forward(get_rational(params, "q", "1/2"),
                                       get_int(params, "nmax", 9));
    if (claim == "qconverse")
        return recover_q_cumulants_from_identity(get_rational(params, "q", "1/2"),
                                                 get_int(params, "order", 8))
            .second;
    throw argument_error("unknown claim '" + claim + "'");
}

nlohmann::json default_grid() {
    nlohmann::json runs = nlohmann::json::array();
    const std::vector<std::string> as{"0", "1", "2", "-1"};
    const std::vector<std::string> bs{"0", "1/3", "1", "-1/4"};

    for (int seed = 1; seed <= 20; ++seed)
        runs.push_back({{"claim", "lemma22"}, {"seed", seed}, {"kmax", 8}, {"nmax", 8}, {"order", 9}});

    for (const auto& a : as)
        for (const auto& b : bs)
            runs.push_back({{"claim", "ladder"}, {"a", a}, {"b", b}, {"kmax", 3}, {"order", 10}});
    for (int seed = 101; seed <= 105; ++seed)
        runs.push_back({{"claim", "ladder"}, {"seed", seed}, {"kmax", 3}, {"order", 10}});

    for (const auto& a : as)
        for (const auto& b : bs) {
            runs.push_back({{"claim", "convolution"},
                            {"a", a},
                            {"b", b},
                            {"alpha", "1/2"},
                            {"beta", "1/2"},
                            {"order", 12}});
            runs.push_back({{"claim", "regression"},
                            {"a", a},
                            {"b", b},
                            {"alpha", "1/2"},
                            {"beta", "1/2"},
                            {"nmax", 7}});
            for (const auto& w : {std::pair{"1/2", "1/2"}, std::pair{"1/4", "3/4"}})
                runs.push_back({{"claim", "thm31"},
                                {"a", a},
                                {"b", b},
                                {"alpha", w.first},
                                {"beta", w.second},
                                {"nmax", 6}});
            runs.push_back({{"claim", "converse"}, {"a", a}, {"b", b}, {"order", 10}});
        }

    for (const auto& a : {"0", "1"})
        for (const auto& b : {"0", "1"})
            for (const auto& ts : {std::pair{"1", "2"}, std::pair{"1", "3"}})
                runs.push_back({{"claim", "prop34"},
                                {"a", a},
                                {"b", b},
                                {"t", ts.first},
                                {"s", ts.second},
                                {"nmax", 4}});

    for (const auto& ab : {std::pair{"0", "0"}, std::pair{"1", "1"}, std::pair{"2", "1"}})
        runs.push_back(
            {{"claim", "prop36"}, {"a", ab.first}, {"b", ab.second}, {"t", "1"}, {"nmax", 5}});

    for (const auto& q : {"0", "1/2", "-1/2", "1/3"}) {
        runs.push_back({{"claim", "qgauss"}, {"q", q}, {"nmax", 9}});
        runs.push_back({{"claim", "qconverse"}, {"q", q}, {"order", 8}});
    }
    return nlohmann::json{{"runs", runs}};
}

std::vector<VerificationReport> run_grid(const nlohmann::json& grid) {
    if (!grid.contains("runs") || !grid.at("runs").is_array())
        throw argument_error("grid file must contain a \"runs\" array");
    std::vector<VerificationReport> reports;
    for (const auto& run : grid.at("runs")) {
        if (!run.contains("claim")) throw argument_error("grid run without a \"claim\"");
        reports.push_back(run_claim(run.at("claim").get<std::string>(), run));
    }
    auto key = [](const VerificationReport& r) {
        std::string k = r.claim;
        for (const auto& [name, value] : r.params) k += "|" + name + "=" + to_fraction_string(value);
        return k;
    };
    std::stable_sort(reports.begin(), reports.end(),
                     [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return reports;
}

} // namespace freeprob
