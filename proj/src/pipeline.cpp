#include "hshift/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "hshift/errors.hpp"
#include "hshift/statevec.hpp"

namespace hshift {

Params validate(const RunConfig& cfg) {
    const Params p = make_params(cfg.n, cfg.q);
    if (cfg.shift) make_shift(*cfg.shift, p);
    if (cfg.samples == 0) throw InvalidArgument("sample count must be positive");
    if (cfg.tolerance && !(*cfg.tolerance >= 0.0 && *cfg.tolerance < 1.0)) {
        throw InvalidArgument("tolerance must lie in [0, 1)");
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw InvalidArgument("format must be csv or json, got '" + cfg.format + "'");
    }
    if (cfg.max_enum == 0) throw InvalidArgument("enumeration ceiling must be positive");
    return p;
}

IntVec random_shift(const Params& p, Rng& rng) {
    IntVec u(static_cast<std::size_t>(p.n));
    for (auto& ui : u) ui = uniform_int(rng, 1, p.shift_bound());
    return u;
}

RecoveryReport recover_from_samples(const std::vector<IntVec>& ys, const Params& p, Strategy strategy,
                                    std::optional<double> tolerance, std::uint64_t ceiling) {
    if (ys.empty()) throw RecoveryFailure("no samples with c = 1 to recover from");
    RecoveryReport report;
    report.strategy = strategy;
    report.sample_count_used = ys.size();

    std::vector<ScoredCandidate> scored;
    if (strategy == Strategy::ml) {
        scored = score_candidates(ys, p, ceiling);
    } else {
        const auto survivors = diseq_candidates(ys, p, tolerance.value_or(default_tolerance(p)));
        report.candidate_set_size = survivors.size();
        if (survivors.empty()) throw RecoveryFailure("disequation filter rejected every candidate");
        for (const auto& v : survivors) scored.push_back({v, log_likelihood(v, ys, p)});
    }
    const ScoredCandidate* best = nullptr;
    for (const auto& s : scored) {
        if (best == nullptr || s.log_likelihood > best->log_likelihood) best = &s;
    }
    report.recovered_u_tilde = best->candidate;
    report.log_likelihood = best->log_likelihood;
    report.recovered_u = finalize(report.recovered_u_tilde, p);
    return report;
}

RecoveryReport run_pipeline(const RunConfig& cfg) {
    const Params p = validate(cfg);
    Rng rng(cfg.seed);
    const IntVec planted = cfg.shift ? *cfg.shift : random_shift(p, rng);
    const HiddenShift shift = make_shift(planted, p);
    const OracleModel oracle = make_oracle(shift, p);

    if (step0_is_zero_shift(oracle)) {
        RecoveryReport report;
        report.planted_u_tilde = planted;
        report.zero_shift_detected = true;
        report.strategy = cfg.strategy;
        report.recovered_u_tilde = IntVec(static_cast<std::size_t>(p.n), 0);
        report.recovered_u = finalize(report.recovered_u_tilde, p);
        return report;
    }

    const auto samples = draw_samples(shift, p, cfg.samples, rng, SamplerOptions{cfg.max_enum, true});
    RecoveryReport report = recover_from_samples(filter_c1(samples), p, cfg.strategy, cfg.tolerance, cfg.max_enum);
    report.planted_u_tilde = planted;
    report.sample_count_drawn = samples.size();
    return report;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    // splitmix64 finalizer over (seed, trial).
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<SweepRow> run_sweep(const std::vector<RunConfig>& grid, std::size_t trials) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const RunConfig& cfg : grid) {
        SweepRow row;
        row.n = cfg.n;
        row.q = cfg.q;
        row.k = cfg.q / 4;
        row.u_tilde = cfg.shift ? format_vec(*cfg.shift) : "random";
        row.m = cfg.samples;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Params p = validate(cfg);
            if (trials == 0) throw InvalidArgument("trial count must be positive");
            double fraction_sum = 0.0;
            for (std::size_t t = 0; t < trials; ++t) {
                RunConfig trial_cfg = cfg;
                trial_cfg.seed = trial_seed(cfg.seed, t);
                Rng rng(trial_cfg.seed);
                const IntVec planted = cfg.shift ? *cfg.shift : random_shift(p, rng);
                const HiddenShift shift = make_shift(planted, p);
                ++row.trials;
                if (step0_is_zero_shift(make_oracle(shift, p))) {
                    ++row.successes;
                    continue;
                }
                const auto ys = filter_c1(draw_samples(shift, p, cfg.samples, rng, SamplerOptions{cfg.max_enum, true}));
                fraction_sum += orthogonal_fraction(planted, ys, p);
                try {
                    const auto report = recover_from_samples(ys, p, cfg.strategy, cfg.tolerance, cfg.max_enum);
                    if (report.recovered_u_tilde == planted) ++row.successes;
                } catch (const RecoveryFailure&) {
                    // counted as an unsuccessful trial
                }
            }
            row.success_rate = static_cast<double>(row.successes) / static_cast<double>(row.trials);
            row.mean_orthogonal_sample_fraction = fraction_sum / static_cast<double>(row.trials);
        } catch (const std::exception& e) {
            row.status = std::string("error: ") + e.what();
        }
        row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hshift
