#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hshift/lattice.hpp"
#include "hshift/spectrum.hpp"

namespace hshift {

enum class Strategy { ml, diseq };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

struct RecoveryReport {
    IntVec planted_u_tilde;
    IntVec recovered_u_tilde;
    RealVec recovered_u;
    bool zero_shift_detected = false;
    std::size_t sample_count_drawn = 0;
    std::size_t sample_count_used = 0;
    Strategy strategy = Strategy::ml;
    std::optional<double> log_likelihood;
    std::optional<std::size_t> candidate_set_size;

    bool success() const { return recovered_u_tilde == planted_u_tilde; }
};

/// Keeps the y of samples with c = 1, in order.
std::vector<IntVec> filter_c1(const std::vector<Sample>& samples);

/// Candidates of the bounded grid {0..2^k}^n without the zero vector, lexicographic.
std::vector<IntVec> candidate_grid(const Params& p, std::uint64_t ceiling = kDefaultEnumCeiling);

/// Sum of log mass(y) over samples; -inf as soon as one sample has mass 0.
double log_likelihood(const std::vector<IntVec>& samples, const std::function<double(const IntVec&)>& mass);

/// Log-likelihood of the c = 1 samples under the conditional law of a
/// nonzero candidate shift. Uses the grid-sum identity sum_y p = 2^{qn}/2,
/// so mass(y) = 2 p_closed(y) / 2^{qn}.
double log_likelihood(const IntVec& candidate, const std::vector<IntVec>& samples, const Params& p);

struct ScoredCandidate {
    IntVec candidate;
    double log_likelihood;
};

/// log_likelihood of every candidate of candidate_grid(p).
std::vector<ScoredCandidate> score_candidates(const std::vector<IntVec>& samples, const Params& p,
                                              std::uint64_t ceiling = kDefaultEnumCeiling);

/// Maximum-likelihood shift; the lexicographically smallest candidate wins ties.
IntVec recover_shift(const std::vector<IntVec>& samples, const Params& p);

/// Fraction of samples with <v, y> = 0 mod 2^q (0 for an empty list).
double orthogonal_fraction(const IntVec& v, const std::vector<IntVec>& samples, const Params& p);

/// Nonzero candidates whose orthogonal-hit fraction is <= tolerance.
std::vector<IntVec> diseq_candidates(const std::vector<IntVec>& samples, const Params& p, double tolerance);

/// 2 * 2^{-3k}.
double default_tolerance(const Params& p);

/// u = delta * u_tilde.
RealVec finalize(const IntVec& u_tilde, const Params& p);

}  // namespace hshift
