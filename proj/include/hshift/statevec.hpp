#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "hshift/lattice.hpp"

namespace hshift {

using Amplitude = std::complex<double>;

/// Basis label |x>|c>|z> with x and z packed by GridIndexer.
struct BasisLabel {
    std::uint64_t x = 0;
    int c = 0;
    std::uint64_t z = 0;

    auto operator<=>(const BasisLabel&) const = default;
};

/// Sparse state over (x, c, oracle output). Only labels carrying a
/// nonzero amplitude are stored.
struct QuantumState {
    Params params;
    std::map<BasisLabel, Amplitude> amplitudes;

    double norm_squared() const;
};

/// Measurement distribution on the first two registers, stored densely:
/// slot 2*pack(y) + c.
struct OutcomeDistribution {
    Params params;
    std::vector<double> mass;

    double at(const IntVec& y, int c) const;
    double at_packed(std::uint64_t y, int c) const { return mass[2 * y + static_cast<std::uint64_t>(c)]; }
    double total() const;
    double marginal_c(int c) const;
};

/// Steps 1-2: windowed superposition over Z_{2^q}^n x Z_2 followed by the
/// oracle. Throws ResourceLimit if 2^{qn} exceeds `ceiling`.
QuantumState build_state(const Params& p, const OracleModel& oracle,
                         std::uint64_t ceiling = kDefaultEnumCeiling);

/// Step 3: character transform over Z_{2^q}^n x Z_2 on the first two
/// registers, then P(y, b) = sum_z |amplitude(y, b, z)|^2.
///
/// The oracle register is traced out first: the reduced density matrix is
/// accumulated by displacement (x - x', c xor c') and the diagonal of the
/// transformed matrix is read off from it. The cost is
/// O(#labels * block + 2^{qn} * #displacements) instead of O(4^{qn}).
OutcomeDistribution fourier_measure(const QuantumState& state);

/// Step 0: f(0,0) == f(0,1), i.e. the shift is zero.
bool step0_is_zero_shift(const OracleModel& oracle);

}  // namespace hshift
