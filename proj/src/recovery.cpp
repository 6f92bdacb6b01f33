#include "hshift/recovery.hpp"

#include <cmath>
#include <limits>

#include "hshift/errors.hpp"

namespace hshift {

std::string to_string(Strategy s) { return s == Strategy::ml ? "ml" : "diseq"; }

Strategy parse_strategy(const std::string& text) {
    if (text == "ml") return Strategy::ml;
    if (text == "diseq" || text == "diseq-filter") return Strategy::diseq;
    throw InvalidArgument("unknown strategy '" + text + "' (expected ml or diseq)");
}

std::vector<IntVec> filter_c1(const std::vector<Sample>& samples) {
    std::vector<IntVec> out;
    for (const auto& s : samples) {
        if (s.c == 1) out.push_back(s.y_tilde);
    }
    return out;
}

std::vector<IntVec> candidate_grid(const Params& p, std::uint64_t ceiling) {
    const auto side = static_cast<std::uint64_t>(p.shift_bound() + 1);
    std::uint64_t total = 1;
    for (int i = 0; i < p.n; ++i) {
        if (total > ceiling / side) throw ResourceLimit("candidate grid {0..2^k}^n exceeds the enumeration ceiling");
        total *= side;
    }
    std::vector<IntVec> out;
    out.reserve(total - 1);
    IntVec v(static_cast<std::size_t>(p.n), 0);
    // Lexicographic: the last coordinate moves fastest.
    for (std::uint64_t step = 1; step < total; ++step) {
        for (std::size_t i = v.size(); i-- > 0;) {
            if (++v[i] <= p.shift_bound()) break;
            v[i] = 0;
        }
        out.push_back(v);
    }
    return out;
}

double log_likelihood(const std::vector<IntVec>& samples, const std::function<double(const IntVec&)>& mass) {
    double total = 0.0;
    for (const auto& y : samples) {
        const double m = mass(y);
        if (!(m > 0.0)) return -std::numeric_limits<double>::infinity();
        total += std::log(m);
    }
    return total;
}

double log_likelihood(const IntVec& candidate, const std::vector<IntVec>& samples, const Params& p) {
    const HiddenShift shift = make_shift(candidate, p);
    if (shift.is_zero()) throw InvalidArgument("log_likelihood: the zero candidate has no conditional law");
    const double log_points = p.n * p.q * std::log(2.0);
    double total = 0.0;
    for (const auto& y : samples) {
        const double twice = 2.0 * p_closed_grid(y, shift, p);
        if (!(twice > 0.0)) return -std::numeric_limits<double>::infinity();
        total += std::log(twice) - log_points;
    }
    return total;
}

std::vector<ScoredCandidate> score_candidates(const std::vector<IntVec>& samples, const Params& p,
                                              std::uint64_t ceiling) {
    std::vector<ScoredCandidate> out;
    for (auto& v : candidate_grid(p, ceiling)) {
        const double ll = log_likelihood(v, samples, p);
        out.push_back({std::move(v), ll});
    }
    return out;
}

namespace {

const ScoredCandidate* best_of(const std::vector<ScoredCandidate>& scored) {
    const ScoredCandidate* best = nullptr;
    for (const auto& s : scored) {
        if (best == nullptr || s.log_likelihood > best->log_likelihood) best = &s;
    }
    return best;
}

}  // namespace

IntVec recover_shift(const std::vector<IntVec>& samples, const Params& p) {
    if (samples.empty()) throw InvalidArgument("recover_shift: no samples");
    const auto scored = score_candidates(samples, p);
    return best_of(scored)->candidate;
}

double orthogonal_fraction(const IntVec& v, const std::vector<IntVec>& samples, const Params& p) {
    if (samples.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& y : samples) hits += inner_mod(v, y, p.q) == 0;
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

std::vector<IntVec> diseq_candidates(const std::vector<IntVec>& samples, const Params& p, double tolerance) {
    if (!(tolerance >= 0.0 && tolerance < 1.0)) throw InvalidArgument("tolerance must lie in [0, 1)");
    std::vector<IntVec> out;
    for (auto& v : candidate_grid(p)) {
        if (orthogonal_fraction(v, samples, p) <= tolerance) out.push_back(std::move(v));
    }
    return out;
}

double default_tolerance(const Params& p) { return 2.0 * std::ldexp(1.0, -3 * p.k); }

RealVec finalize(const IntVec& u_tilde, const Params& p) { return make_shift(u_tilde, p).u_real; }

}  // namespace hshift
