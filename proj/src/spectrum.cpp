#include "hshift/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "hshift/errors.hpp"

namespace hshift {

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidArgument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(rng());
    const std::uint64_t mask = std::bit_ceil(span + 1) - 1;
    for (;;) {
        const std::uint64_t draw = rng() & mask;
        if (draw <= span) return lo + static_cast<std::int64_t>(draw);
    }
}

namespace {

void check_dim(std::size_t got, const Params& p, const char* what) {
    if (got != static_cast<std::size_t>(p.n)) {
        throw InvalidArgument(std::string(what) + ": expected " + std::to_string(p.n) + " coordinates, got " +
                              std::to_string(got));
    }
}

double cos_product(const HiddenShift& shift, const Params& p) {
    double prod = 1.0;
    for (double u : shift.u_real) prod *= std::cos(std::numbers::pi * u / p.delta_big);
    return prod;
}

double grid_phase_cos(std::span<const std::int64_t> y_tilde, const HiddenShift& shift, const Params& p) {
    const std::uint64_t phase = inner_mod(shift.u_tilde, y_tilde, p.q);
    return std::cos(2.0 * std::numbers::pi * std::ldexp(static_cast<double>(phase), -p.q));
}

}  // namespace

double p_closed(std::span<const double> y, const HiddenShift& shift, const Params& p) {
    check_dim(y.size(), p, "p_closed");
    check_dim(shift.u_real.size(), p, "p_closed shift");
    double dot = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) dot += shift.u_real[i] * y[i];
    return 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * dot) * cos_product(shift, p);
}

double p_closed_grid(std::span<const std::int64_t> y_tilde, const HiddenShift& shift, const Params& p) {
    check_dim(y_tilde.size(), p, "p_closed_grid");
    check_dim(shift.u_tilde.size(), p, "p_closed_grid shift");
    return 0.5 - 0.5 * grid_phase_cos(y_tilde, shift, p) * cos_product(shift, p);
}

double cyclic_window_overlap(std::int64_t u, const Params& p) {
    const std::uint64_t n_points = p.grid_size;
    const std::uint64_t shift = static_cast<std::uint64_t>(reduce_mod(u, p.q));
    double sum = 0.0;
    for (std::uint64_t x = 0; x < n_points; ++x) {
        const std::uint64_t xs = (x + shift) & p.mask();
        sum += window_1d(std::ldexp(static_cast<double>(x), -p.q)) *
               window_1d(std::ldexp(static_cast<double>(xs), -p.q));
    }
    return sum / static_cast<double>(n_points);
}

double p_cyclic_grid(std::span<const std::int64_t> y_tilde, const HiddenShift& shift, const Params& p) {
    check_dim(y_tilde.size(), p, "p_cyclic_grid");
    double overlap = 1.0;
    for (auto u : shift.u_tilde) overlap *= cyclic_window_overlap(u, p);
    return 0.5 - 0.5 * grid_phase_cos(y_tilde, shift, p) * overlap;
}

double ConditionalMass::at(const IntVec& y) const {
    check_dim(y.size(), params, "ConditionalMass::at");
    return mass[GridIndexer{params.n, params.q}.pack(y)];
}

ConditionalMass conditional_mass(const HiddenShift& shift, const Params& p, std::uint64_t ceiling) {
    if (shift.is_zero()) throw InvalidArgument("conditional_mass: undefined for the zero shift");
    const std::uint64_t points = p.grid_points();
    if (points > ceiling) {
        throw ResourceLimit("conditional_mass: 2^{qn} = " + std::to_string(points) + " exceeds ceiling " +
                            std::to_string(ceiling));
    }
    const GridIndexer grid{p.n, p.q};
    ConditionalMass out;
    out.params = p;
    out.mass.resize(points);
    for (std::uint64_t yi = 0; yi < points; ++yi) {
        out.mass[yi] = p_closed_grid(grid.unpack(yi), shift, p);
        out.normalizer += out.mass[yi];
    }
    for (double& m : out.mass) m /= out.normalizer;
    return out;
}

std::vector<Sample> draw_samples(const HiddenShift& shift, const Params& p, std::size_t m, Rng& rng,
                                 const SamplerOptions& options) {
    if (m == 0) throw InvalidArgument("draw_samples: sample count must be positive");
    check_dim(shift.u_tilde.size(), p, "draw_samples shift");
    const GridIndexer grid{p.n, p.q};
    std::vector<Sample> out;
    out.reserve(m);

    const bool enumerable = static_cast<long long>(p.n) * p.q <= 63 && p.grid_points() <= options.enumeration_ceiling;
    if (enumerable) {
        const std::uint64_t points = p.grid_points();
        std::vector<double> cdf(2 * points);
        double running = 0.0;
        for (std::uint64_t yi = 0; yi < points; ++yi) {
            const double p1 = p_closed_grid(grid.unpack(yi), shift, p);
            running += 1.0 - p1;
            cdf[2 * yi] = running;
            running += p1;
            cdf[2 * yi + 1] = running;
        }
        for (std::size_t s = 0; s < m; ++s) {
            const double target = uniform01(rng) * running;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
            if (it == cdf.end()) --it;
            const auto slot = static_cast<std::uint64_t>(it - cdf.begin());
            out.push_back(Sample{grid.unpack(slot / 2), static_cast<int>(slot & 1)});
        }
        return out;
    }
    if (!options.allow_rejection) {
        throw ResourceLimit("draw_samples: grid of 2^" + std::to_string(p.n * p.q) +
                            " points exceeds the enumeration ceiling and rejection sampling is disabled");
    }
    // Uniform proposal over (y, c); accept with N^n * P(y, c) <= 1.
    while (out.size() < m) {
        IntVec y(static_cast<std::size_t>(p.n));
        for (auto& yi : y) yi = static_cast<std::int64_t>(rng() & p.mask());
        const int c = static_cast<int>(rng() >> 63);
        const double p1 = p_closed_grid(y, shift, p);
        if (uniform01(rng) < (c ? p1 : 1.0 - p1)) out.push_back(Sample{std::move(y), c});
    }
    return out;
}

std::vector<Sample> draw_samples(const HiddenShift& shift, const Params& p, std::size_t m, std::uint64_t seed,
                                 const SamplerOptions& options) {
    Rng rng(seed);
    return draw_samples(shift, p, m, rng, options);
}

}  // namespace hshift
