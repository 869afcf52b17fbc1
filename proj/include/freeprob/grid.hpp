#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "freeprob/verify.hpp"

namespace freeprob {

/// Deterministic small-fraction cumulant sequence for randomized identity
/// checks (numerators in [-9,9], denominators in [1,9]); mt19937_64 keyed by
/// the seed, so results are reproducible across platforms.
CumulantSequence random_cumulant_sequence(std::uint64_t seed, int order);
MomentSequence random_moment_sequence(std::uint64_t seed, int order);

/// Runs one named claim with a JSON parameter object. Claims:
/// lemma22, ladder, convolution, regression, thm31, converse, prop34,
/// prop36, qgauss, qconverse. Rational parameters are fraction strings;
/// integer parameters (order, nmax, kmax, seed) are JSON numbers.
VerificationReport run_claim(const std::string& claim, const nlohmann::json& params);

/// The shipped verification grid: {"runs": [{"claim": ..., ...}, ...]}.
/// data/default_grid.json carries the same content as a config file.
nlohmann::json default_grid();

/// Runs every entry of a grid; reports are returned sorted by claim and then
/// by canonical parameter string, independent of execution order.
std::vector<VerificationReport> run_grid(const nlohmann::json& grid);

} // namespace freeprob
