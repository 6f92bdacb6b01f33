#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hshift/lattice.hpp"

namespace hshift {

/// Fixed generator so sample streams are reproducible across platforms.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// Uniform integer in [lo, hi] by rejection on the smallest covering bit mask.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// One measurement outcome (y, c) of the Fourier sampling step.
struct Sample {
    IntVec y_tilde;
    int c = 0;

    bool operator==(const Sample&) const = default;
};

/// p(y,1) = 1/2 - 1/2 cos(2 pi <u,y>) prod_i cos(pi u_i / Delta) for a real frequency y.
double p_closed(std::span<const double> y, const HiddenShift& shift, const Params& p);

/// p_closed at the grid frequency y = y_tilde / Delta, with the phase
/// <u,y> = <u_tilde, y_tilde> / 2^q reduced exactly in integers.
double p_closed_grid(std::span<const std::int64_t> y_tilde, const HiddenShift& shift, const Params& p);

/// (1/N) sum_x omega(x/N) omega(((x+u) mod N)/N): the cyclic autocorrelation
/// of the sampled window, which replaces cos(pi u / N) when the register
/// wraps around.
double cyclic_window_overlap(std::int64_t u, const Params& p);

/// p_closed_grid with cos(pi u_i / N) replaced by cyclic_window_overlap(u_i).
double p_cyclic_grid(std::span<const std::int64_t> y_tilde, const HiddenShift& shift, const Params& p);

/// Distribution of y conditioned on c = 1, dense over packed y.
struct ConditionalMass {
    Params params;
    std::vector<double> mass;
    double normalizer = 0.0;

    double at(const IntVec& y) const;
};

ConditionalMass conditional_mass(const HiddenShift& shift, const Params& p,
                                 std::uint64_t ceiling = kDefaultEnumCeiling);

struct SamplerOptions {
    /// Exact categorical sampling is used while 2^{qn} <= this value.
    std::uint64_t enumeration_ceiling = kDefaultEnumCeiling;
    bool allow_rejection = true;
};

/// m independent draws from the joint law P(y,1) = p/2^{qn}, P(y,0) = (1-p)/2^{qn}.
std::vector<Sample> draw_samples(const HiddenShift& shift, const Params& p, std::size_t m, Rng& rng,
                                 const SamplerOptions& options = {});

std::vector<Sample> draw_samples(const HiddenShift& shift, const Params& p, std::size_t m,
                                 std::uint64_t seed, const SamplerOptions& options = {});

}  // namespace hshift
