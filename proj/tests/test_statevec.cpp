#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "hshift/errors.hpp"
#include "hshift/spectrum.hpp"
#include "hshift/statevec.hpp"

using namespace hshift;

namespace {

// Independent route: apply the character transform block by block (one block
// per oracle output z) and sum |amplitude|^2 directly. O(4^{qn}).
std::vector<double> brute_measure(const QuantumState& state) {
    const Params& p = state.params;
    const GridIndexer grid{p.n, p.q};
    const std::uint64_t points = p.grid_points();
    std::map<std::uint64_t, std::vector<std::pair<BasisLabel, Amplitude>>> blocks;
    for (const auto& [label, amp] : state.amplitudes) blocks[label.z].push_back({label, amp});
    std::vector<double> mass(2 * points, 0.0);
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(points));
    for (const auto& [z, entries] : blocks) {
        for (std::uint64_t yi = 0; yi < points; ++yi) {
            const IntVec y = grid.unpack(yi);
            for (int b = 0; b < 2; ++b) {
                Amplitude acc{};
                for (const auto& [label, amp] : entries) {
                    const double angle = 2.0 * std::numbers::pi *
                                         static_cast<double>(inner_mod(grid.unpack(label.x), y, p.q)) /
                                         static_cast<double>(p.grid_size);
                    const double sign = (b && label.c) ? -1.0 : 1.0;
                    acc += amp * std::polar(scale * sign, angle);
                }
                mass[2 * yi + static_cast<std::uint64_t>(b)] += std::norm(acc);
            }
        }
    }
    return mass;
}

OutcomeDistribution measure(int n, int q, const IntVec& u) {
    const Params p = make_params(n, q);
    return fourier_measure(build_state(p, make_oracle(make_shift(u, p), p)));
}

double closed_form_p1(const IntVec& u, const IntVec& y, const Params& p) {
    const double turn = 2.0 * std::numbers::pi / static_cast<double>(p.grid_size);
    double prod = 1.0;
    for (auto ui : u) prod *= std::cos(std::numbers::pi * static_cast<double>(ui) / static_cast<double>(p.grid_size));
    return (1.0 - std::cos(turn * static_cast<double>(inner_mod(u, y, p.q))) * prod) /
           (2.0 * static_cast<double>(p.grid_points()));
}

}  // namespace

TEST_CASE("build_state is normalized and sparse as expected") {
    for (std::int64_t u : {0, 1, 2}) {
        const Params p = make_params(1, 4);
        const QuantumState s = build_state(p, make_oracle(make_shift({u}, p), p));
        CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(s.amplitudes.size() == 2 * 15);
    }
    const Params p2 = make_params(2, 4);
    const QuantumState s2 = build_state(p2, make_oracle(make_shift({2, 1}, p2), p2));
    CHECK(s2.amplitudes.size() == 2 * 15 * 15);
    const GridIndexer grid{2, 4};
    for (const auto& [label, amp] : s2.amplitudes) {
        const IntVec x = grid.unpack(label.x);
        const IntVec z = grid.unpack(label.z);
        CHECK(x[0] != 0);
        CHECK(x[1] != 0);
        if (label.c == 1) {
            CHECK(z[0] == reduce_mod(x[0] - 2, 4));
            CHECK(z[1] == reduce_mod(x[1] - 1, 4));
        } else {
            CHECK(z == x);
        }
        const double expected = std::sqrt(std::pow(p2.delta_small, 2) / 2.0) * window_on_grid(x, p2);
        CHECK(amp.real() == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("build_state honours the enumeration ceiling") {
    const Params p = make_params(2, 8);
    CHECK_THROWS_AS(build_state(p, make_oracle(make_shift({1, 1}, p), p), 1000), ResourceLimit);
}

TEST_CASE("fourier_measure agrees with the block-by-block brute force") {
    for (auto [n, q, u] : {std::tuple{1, 4, IntVec{2}}, std::tuple{1, 8, IntVec{3}}, std::tuple{2, 4, IntVec{2, 1}},
                           std::tuple{2, 4, IntVec{0, 0}}, std::tuple{1, 8, IntVec{4}}}) {
        const Params p = make_params(n, q);
        const QuantumState s = build_state(p, make_oracle(make_shift(u, p), p));
        const OutcomeDistribution fast = fourier_measure(s);
        const std::vector<double> slow = brute_measure(s);
        double worst = 0.0;
        for (std::size_t i = 0; i < slow.size(); ++i) worst = std::max(worst, std::abs(fast.mass[i] - slow[i]));
        CHECK(worst <= 1e-15);
    }
}

TEST_CASE("unitarity and the c marginal") {
    for (auto [n, q] : {std::pair{1, 4}, std::pair{1, 8}, std::pair{2, 4}, std::pair{2, 8}}) {
        const Params p = make_params(n, q);
        const IntVec u(static_cast<std::size_t>(n), p.shift_bound());
        const OutcomeDistribution d = measure(n, q, u);
        CHECK(std::abs(d.total() - 1.0) <= 1e-12);
        CHECK(std::abs(d.marginal_c(1) - 0.5) <= 1e-12);
        const double flat = 1.0 / static_cast<double>(p.grid_points());
        double worst = 0.0;
        for (std::uint64_t y = 0; y < p.grid_points(); ++y) {
            worst = std::max(worst, std::abs(d.at_packed(y, 0) + d.at_packed(y, 1) - flat));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("zero shift gives no c = 1 outcomes") {
    const OutcomeDistribution d = measure(2, 4, {0, 0});
    for (std::uint64_t y = 0; y < 256; ++y) CHECK(d.at_packed(y, 1) == 0.0);
    CHECK(d.marginal_c(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed form matches exactly when no shift coordinate wraps the window") {
    for (auto [n, q, u] : {std::tuple{1, 4, IntVec{1}}, std::tuple{1, 8, IntVec{1}}, std::tuple{2, 4, IntVec{1, 1}},
                           std::tuple{2, 4, IntVec{0, 1}}, std::tuple{2, 8, IntVec{1, 0}}}) {
        const Params p = make_params(n, q);
        const OutcomeDistribution d = measure(n, q, u);
        const GridIndexer grid{n, q};
        double worst = 0.0;
        for (std::uint64_t yi = 0; yi < p.grid_points(); ++yi) {
            worst = std::max(worst, std::abs(d.at_packed(yi, 1) - closed_form_p1(u, grid.unpack(yi), p)));
        }
        CHECK(worst <= 1e-15);
    }
}

TEST_CASE("for every shift the distribution is the closed form with the cyclic window overlap") {
    // The wrapped c = 1 branch pairs sin with |sin|; the overlap is then the
    // computed cyclic autocorrelation rather than cos(pi u / 2^q).
    for (auto [n, q, u] : {std::tuple{1, 4, IntVec{2}}, std::tuple{1, 8, IntVec{4}}, std::tuple{2, 4, IntVec{2, 2}},
                           std::tuple{2, 8, IntVec{3, 4}}}) {
        const Params p = make_params(n, q);
        const HiddenShift shift = make_shift(u, p);
        const OutcomeDistribution d = measure(n, q, u);
        const GridIndexer grid{n, q};
        const double points = static_cast<double>(p.grid_points());
        double worst_cyclic = 0.0;
        double worst_closed = 0.0;
        for (std::uint64_t yi = 0; yi < p.grid_points(); ++yi) {
            const IntVec y = grid.unpack(yi);
            worst_cyclic = std::max(worst_cyclic, std::abs(d.at_packed(yi, 1) - p_cyclic_grid(y, shift, p) / points));
            worst_closed = std::max(worst_closed, std::abs(d.at_packed(yi, 1) - closed_form_p1(u, y, p)));
        }
        CHECK(worst_cyclic <= 1e-15);
        CHECK(worst_closed > 1e-12);
    }
}

TEST_CASE("the closed-form gap at n = 1, q = 4, u = 2 is the single wrapped term") {
    // The unwrapped sum is exactly cos(pi/8). Only x = 15 wraps, flipping the
    // sign of one sin^2(pi/16) term, so the overlap gains (2/16) * 2 sin^2(pi/16).
    const Params p = make_params(1, 4);
    const double expected = std::cos(std::numbers::pi / 8) + 0.25 * std::pow(std::sin(std::numbers::pi / 16), 2);
    CHECK(cyclic_window_overlap(2, p) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("fourier_measure rejects an unnormalized state") {
    const Params p = make_params(1, 4);
    QuantumState s = build_state(p, make_oracle(make_shift({1}, p), p));
    s.amplitudes.begin()->second *= 2.0;
    CHECK_THROWS_AS(fourier_measure(s), InvalidArgument);
}

TEST_CASE("step 0 detects exactly the zero shift") {
    const Params p = make_params(2, 8);
    CHECK(step0_is_zero_shift(make_oracle(make_shift({0, 0}, p), p)));
    CHECK_FALSE(step0_is_zero_shift(make_oracle(make_shift({2, 2}, p), p)));
    CHECK_FALSE(step0_is_zero_shift(make_oracle(make_shift({0, 1}, p), p)));
}
