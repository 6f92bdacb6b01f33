#include "hshift/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "hshift/errors.hpp"

namespace hshift {

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const auto& [label, amp] : amplitudes) total += std::norm(amp);
    return total;
}

double OutcomeDistribution::at(const IntVec& y, int c) const {
    if (y.size() != static_cast<std::size_t>(params.n) || (c != 0 && c != 1)) {
        throw InvalidArgument("outcome label does not match distribution shape");
    }
    return at_packed(GridIndexer{params.n, params.q}.pack(y), c);
}

double OutcomeDistribution::total() const {
    double sum = 0.0;
    for (double m : mass) sum += m;
    return sum;
}

double OutcomeDistribution::marginal_c(int c) const {
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(c); i < mass.size(); i += 2) sum += mass[i];
    return sum;
}

QuantumState build_state(const Params& p, const OracleModel& oracle, std::uint64_t ceiling) {
    if (!(oracle.params == p)) throw InvalidArgument("build_state: oracle params differ from instance params");
    const std::uint64_t points = p.grid_points();
    if (points > ceiling) {
        throw ResourceLimit("build_state: 2^{qn} = " + std::to_string(points) + " exceeds ceiling " +
                            std::to_string(ceiling) + " (n=" + std::to_string(p.n) +
                            ", q=" + std::to_string(p.q) + ")");
    }
    const GridIndexer grid{p.n, p.q};
    const double prefactor = std::sqrt(std::pow(p.delta_small, p.n) / 2.0);

    QuantumState state;
    state.params = p;
    for (std::uint64_t xi = 0; xi < points; ++xi) {
        const IntVec x = grid.unpack(xi);
        const double w = window_on_grid(x, p);
        if (w == 0.0) continue;
        for (int c = 0; c < 2; ++c) {
            const std::uint64_t z = grid.pack(oracle.index(x, c));
            state.amplitudes.emplace(BasisLabel{xi, c, z}, Amplitude{prefactor * w, 0.0});
        }
    }
    return state;
}

OutcomeDistribution fourier_measure(const QuantumState& state) {
    const Params& p = state.params;
    const double norm = state.norm_squared();
    if (std::abs(norm - 1.0) > 1e-12) {
        throw InvalidArgument("fourier_measure: state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    const std::uint64_t points = p.grid_points();
    const GridIndexer grid{p.n, p.q};

    // Regroup by oracle output; each group is one pure block of the reduced state.
    std::vector<std::tuple<std::uint64_t, std::uint64_t, int, Amplitude>> entries;
    entries.reserve(state.amplitudes.size());
    for (const auto& [label, amp] : state.amplitudes) entries.emplace_back(label.z, label.x, label.c, amp);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });

    // rho[(x,c),(x',c')] summed along displacement (x - x', c ^ c').
    std::unordered_map<std::uint64_t, Amplitude> displacement;
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo;
        while (hi < entries.size() && std::get<0>(entries[hi]) == std::get<0>(entries[lo])) ++hi;
        for (std::size_t a = lo; a < hi; ++a) {
            const IntVec xa = grid.unpack(std::get<1>(entries[a]));
            for (std::size_t b = lo; b < hi; ++b) {
                IntVec d = grid.unpack(std::get<1>(entries[b]));
                for (std::size_t i = 0; i < d.size(); ++i) d[i] = reduce_mod(xa[i] - d[i], p.q);
                const std::uint64_t e = static_cast<std::uint64_t>(std::get<2>(entries[a]) ^ std::get<2>(entries[b]));
                displacement[grid.pack(d) * 2 + e] += std::get<3>(entries[a]) * std::conj(std::get<3>(entries[b]));
            }
        }
        lo = hi;
    }

    std::vector<std::pair<std::uint64_t, Amplitude>> terms(displacement.begin(), displacement.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    OutcomeDistribution out;
    out.params = p;
    out.mass.assign(2 * points, 0.0);
    const double scale = 1.0 / (2.0 * static_cast<double>(points));
    const double turn = 2.0 * std::numbers::pi / static_cast<double>(p.grid_size);
    for (const auto& [key, weight] : terms) {
        if (weight == Amplitude{}) continue;
        const IntVec d = grid.unpack(key / 2);
        const bool odd = (key & 1) != 0;
        for (std::uint64_t yi = 0; yi < points; ++yi) {
            const IntVec y = grid.unpack(yi);
            const double angle = turn * static_cast<double>(inner_mod(d, y, p.q));
            const double re = weight.real() * std::cos(angle) - weight.imag() * std::sin(angle);
            out.mass[2 * yi] += scale * re;
            out.mass[2 * yi + 1] += scale * (odd ? -re : re);
        }
    }
    for (double& m : out.mass) {
        if (m < -1e-12) throw std::logic_error("fourier_measure: negative probability " + std::to_string(m));
        if (m < 0.0) m = 0.0;
    }
    return out;
}

bool step0_is_zero_shift(const OracleModel& oracle) {
    const IntVec origin(static_cast<std::size_t>(oracle.params.n), 0);
    return oracle.index(origin, 0) == oracle.index(origin, 1);
}

}  // namespace hshift
