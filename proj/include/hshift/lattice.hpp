#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hshift {

using IntVec = std::vector<std::int64_t>;
using RealVec = std::vector<double>;

/// Default limit on the number of grid points any exhaustive routine visits.
inline constexpr std::uint64_t kDefaultEnumCeiling = std::uint64_t{1} << 24;

/// Instance geometry. The register holds N = 2^q points per dimension,
/// the real lattice spacing is delta_small = 2^{-q/2} and the window
/// width is delta_big = 2^{q/2}.
struct Params {
    int n = 1;
    int q = 4;
    int k = 1;
    double delta_big = 4.0;
    double delta_small = 0.25;
    std::uint64_t grid_size = 16;

    /// Largest admissible shift coordinate, 2^k.
    std::int64_t shift_bound() const { return std::int64_t{1} << k; }
    std::uint64_t mask() const { return grid_size - 1; }

    /// Number of points of the full grid Z_{2^q}^n; throws ResourceLimit
    /// when n*q does not fit in 63 bits.
    std::uint64_t grid_points() const;

    bool operator==(const Params&) const = default;
};

Params make_params(int n, int q);

/// Sine bump sqrt(2) sin(pi x) on [0,1], zero elsewhere.
double window_1d(double x);

/// Product window Delta^{-n/2} prod_j omega(x_j / Delta).
double window_nd(std::span<const double> x, const Params& p);

/// Window evaluated on the sampling lattice point x = delta * x_tilde.
/// Exact scaling: delta * x_tilde / Delta = x_tilde / 2^q.
double window_on_grid(std::span<const std::int64_t> x_tilde, const Params& p);

struct HiddenShift {
    IntVec u_tilde;
    RealVec u_real;

    bool is_zero() const;
};

/// Checks 0 <= u_i <= 2^k and returns the shift with u = delta * u_tilde.
HiddenShift make_shift(const IntVec& u_tilde, const Params& p);

/// Oracle f(x, c) on the cyclic grid. The returned label stands for an
/// orthonormal basis vector |z>, z = x - c*u mod 2^q, so that
/// f(x, 0) = f(x + u, 1).
struct OracleModel {
    Params params;
    HiddenShift shift;
    double alpha = 0.0;

    IntVec index(std::span<const std::int64_t> x_tilde, int c) const;
};

OracleModel make_oracle(const HiddenShift& shift, const Params& p);

/// Mixed-radix packing of vectors in Z_{2^q}^n; coordinate 0 is least significant.
struct GridIndexer {
    int n;
    int q;

    std::uint64_t pack(std::span<const std::int64_t> v) const;
    IntVec unpack(std::uint64_t index) const;
};

/// <a, b> mod 2^q computed in wrapping unsigned arithmetic (exact since 2^q | 2^64).
std::uint64_t inner_mod(std::span<const std::int64_t> a, std::span<const std::int64_t> b, int q);

std::int64_t reduce_mod(std::int64_t value, int q);

std::string format_vec(std::span<const std::int64_t> v);
IntVec parse_vec(const std::string& text);

}  // namespace hshift
