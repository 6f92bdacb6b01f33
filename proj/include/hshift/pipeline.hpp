#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hshift/lattice.hpp"
#include "hshift/recovery.hpp"

namespace hshift {

struct RunConfig {
    int n = 2;
    int q = 8;
    std::optional<IntVec> shift;  // nullopt: plant a uniform shift from {1..2^k}^n
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    Strategy strategy = Strategy::ml;
    std::optional<double> tolerance;  // diseq only; defaults to 2 * 2^{-3k}
    std::string format = "json";
    std::string out_path;
    std::uint64_t max_enum = kDefaultEnumCeiling;
};

/// Checks every field against the instance preconditions; throws InvalidArgument.
Params validate(const RunConfig& cfg);

IntVec random_shift(const Params& p, Rng& rng);

/// Steps 4-6 on already-filtered samples (the y of the c = 1 outcomes).
RecoveryReport recover_from_samples(const std::vector<IntVec>& ys, const Params& p, Strategy strategy,
                                    std::optional<double> tolerance = std::nullopt,
                                    std::uint64_t ceiling = kDefaultEnumCeiling);

/// Steps 0-6 on a planted instance. Deterministic in (cfg, cfg.seed).
RecoveryReport run_pipeline(const RunConfig& cfg);

struct SweepRow {
    int n = 0;
    int q = 0;
    int k = 0;
    std::string u_tilde;
    std::size_t m = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    double mean_orthogonal_sample_fraction = 0.0;
    double wall_time = 0.0;
    std::string status = "ok";
};

/// Generator seed for one trial. Rows that share cfg.seed see the same
/// planted shifts and sample prefixes, so they are matched across m.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// One row per config; a config that throws yields a row with status set
/// to the error message instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const std::vector<RunConfig>& grid, std::size_t trials);

}  // namespace hshift
