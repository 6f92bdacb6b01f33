// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any selected criterion fails.

#include <CLI11.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "hshift/binomial.hpp"
#include "hshift/orthogonality.hpp"
#include "hshift/pipeline.hpp"
#include "hshift/report_io.hpp"
#include "hshift/spectrum.hpp"
#include "hshift/statevec.hpp"

using namespace hshift;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

const std::vector<std::pair<int, int>> kStateGrid = {{1, 4}, {1, 8}, {2, 4}, {2, 8}};

// Every u_tilde in {0..2^k}^n, first coordinate slowest.
std::vector<IntVec> bounded_shifts(const Params& p, std::int64_t lo) {
    std::vector<IntVec> out;
    IntVec v(static_cast<std::size_t>(p.n), lo);
    for (;;) {
        out.push_back(v);
        std::size_t i = v.size();
        while (i-- > 0) {
            if (++v[i] <= p.shift_bound()) break;
            v[i] = lo;
        }
        if (i == static_cast<std::size_t>(-1)) return out;
    }
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Verdict closed_form_equality() {
    double worst = 0.0;
    std::string where = "none";
    for (auto [n, q] : kStateGrid) {
        const Params p = make_params(n, q);
        const GridIndexer grid{n, q};
        const double turn = 2.0 * std::numbers::pi / static_cast<double>(p.grid_size);
        const double scale = 2.0 * static_cast<double>(p.grid_points());
        for (const IntVec& u : bounded_shifts(p, 0)) {
            const OutcomeDistribution d = fourier_measure(build_state(p, make_oracle(make_shift(u, p), p)));
            double prod = 1.0;
            for (auto ui : u) prod *= std::cos(std::numbers::pi * static_cast<double>(ui) / static_cast<double>(p.grid_size));
            for (std::uint64_t yi = 0; yi < p.grid_points(); ++yi) {
                const double phase = static_cast<double>(inner_mod(u, grid.unpack(yi), q));
                const double expected = (1.0 - std::cos(turn * phase) * prod) / scale;
                const double dev = std::abs(d.at_packed(yi, 1) - expected);
                if (dev > worst) {
                    worst = dev;
                    where = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " u=(" + format_vec(u) +
                            ") y=(" + format_vec(grid.unpack(yi)) + ")";
                }
            }
        }
    }
    return {worst <= 1e-10, "max |P(y,1) - closed form| = " + sci(worst) + " at " + where + " (tol 1e-10)"};
}

Verdict normalization() {
    double worst_total = 0.0;
    double worst_marginal = 0.0;
    std::size_t instances = 0;
    for (auto [n, q] : kStateGrid) {
        const Params p = make_params(n, q);
        for (const IntVec& u : bounded_shifts(p, 0)) {
            const HiddenShift s = make_shift(u, p);
            if (s.is_zero()) continue;
            const OutcomeDistribution d = fourier_measure(build_state(p, make_oracle(s, p)));
            worst_total = std::max(worst_total, std::abs(d.total() - 1.0));
            worst_marginal = std::max(worst_marginal, std::abs(d.marginal_c(1) - 0.5));
            ++instances;
        }
    }
    return {worst_total <= 1e-12 && worst_marginal <= 1e-12,
            std::to_string(instances) + " shifts: max |sum P - 1| = " + sci(worst_total) + ", max |P(c=1) - 1/2| = " +
                sci(worst_marginal) + " (tol 1e-12)"};
}

Verdict lemma_count() {
    bool ok = true;
    std::string values;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
        const BigInt c = brute_count(IntVec(static_cast<std::size_t>(n), std::int64_t{1} << k), 4 * k);
        ok = ok && c == lemma_max_count(n, k);
        values += (values.empty() ? "" : ", ") + c.str();
    }
    BigInt best = 0;
    for (std::int64_t a = 1; a <= 2; ++a) {
        for (std::int64_t b = 1; b <= 2; ++b) best = std::max(best, brute_count({a, b}, 4));
    }
    ok = ok && best == 32;
    return {ok, "counts " + values + " (expect 2, 32, 512, 1024); max over {1,2}^2 at q=4 is " + best.str()};
}

Verdict lemma_bound() {
    bool exhaustive_ok = true;
    std::size_t checked = 0;
    for (int n : {1, 2}) {
        for (int q : {4, 8}) {
            const Params p = make_params(n, q);
            for (const IntVec& u : bounded_shifts(p, 1)) {
                const BigInt c = brute_count(u, q);
                exhaustive_ok = exhaustive_ok && (c << (3 * p.k)) <= (BigInt(1) << (q * n));
                ++checked;
            }
        }
    }

    bool sweep_ok = true;
    std::string sweep_detail;
    const std::size_t trials = 50;
    std::vector<RunConfig> grid;
    for (auto [n, q] : kStateGrid) {
        RunConfig cfg;
        cfg.n = n;
        cfg.q = q;
        cfg.samples = 500;
        cfg.seed = 1;
        grid.push_back(cfg);
    }
    for (const SweepRow& row : run_sweep(grid, trials)) {
        const double bound = std::ldexp(1.0, -3 * row.k);
        // Binomial spread of the pooled fraction at the bound, about m/2 c = 1 samples per trial.
        const double sigma = std::sqrt(bound * (1.0 - bound) / (static_cast<double>(trials * row.m) / 2.0));
        const bool ok = row.status == "ok" && row.mean_orthogonal_sample_fraction <= bound + 3.0 * sigma;
        sweep_ok = sweep_ok && ok;
        sweep_detail += " n=" + std::to_string(row.n) + ",q=" + std::to_string(row.q) + ":" +
                        sci(row.mean_orthogonal_sample_fraction) + "<=" + sci(bound + 3.0 * sigma);
    }
    return {exhaustive_ok && sweep_ok,
            std::to_string(checked) + " shifts within 2^{-3k} exhaustively (" + (exhaustive_ok ? "ok" : "violated") +
                "); sweep fractions" + sweep_detail};
}

struct AuditTally {
    std::size_t audits = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++audits;
        if (!ok) {
            if (failures == 0) first_failure = what;
            ++failures;
        }
    }
};

Verdict propositions() {
    const int q = 4;
    AuditTally p1, p2, p3;

    // Prop 1: a repeated coordinate doubled, n = 2.
    for (std::int64_t a = 1; a <= 7; ++a) {
        const IntVec u = {a, a};
        for (std::size_t i = 0; i < 2; ++i) {
            const IntVec up = prop1_map({0, 0}, u, i, q).u_prime;
            const MapAudit audit = audit_map(u, up, q, [&](const IntVec& y) { return prop1_map(y, u, i, q); });
            const bool ok = audit.injective() && audit.preserves_inner_product && audit.lands_in_codomain &&
                            brute_count(u, q) <= brute_count(up, q);
            p1.record(ok, "prop1 u=(" + format_vec(u) + ") i=" + std::to_string(i) + " collisions=" +
                              std::to_string(audit.collisions));
        }
    }

    // Prop 2: distinct power-of-two exponents, n = 2.
    for (int s = 0; s <= 3; ++s) {
        for (int t = 0; t <= 3; ++t) {
            if (s == t) continue;
            const IntVec u = {std::int64_t{1} << s, std::int64_t{1} << t};
            const IntVec up = prop2_map({0, 0}, u, q).u_prime;
            const MapAudit audit = audit_map(u, up, q, [&](const IntVec& y) { return prop2_map(y, u, q); });
            const bool ok = audit.injective() && audit.preserves_inner_product && audit.lands_in_codomain &&
                            brute_count(u, q) <= brute_count(up, q);
            p2.record(ok, "prop2 u=(" + format_vec(u) + ")");
        }
    }

    // Prop 3: odd part v in {3,5,7} normalized away, n <= 2.
    std::vector<std::int64_t> targets;
    for (std::int64_t v : {3, 5, 7}) {
        for (std::int64_t scaled = v; scaled < 16; scaled *= 2) targets.push_back(scaled);
    }
    auto audit3 = [&](const IntVec& u, std::size_t j) {
        const IntVec up = prop3_map(solution_set(u, q).front(), u, j, q).u_prime;
        const MapAudit audit = audit_map(u, up, q, [&](const IntVec& y) { return prop3_map(y, u, j, q); });
        const bool ok = audit.injective() && audit.surjective() && audit.lands_in_codomain &&
                        brute_count(u, q) == brute_count(up, q);
        p3.record(ok, "prop3 u=(" + format_vec(u) + ") j=" + std::to_string(j));
    };
    for (std::int64_t a : targets) {
        audit3({a}, 0);
        for (std::int64_t b = 0; b < 16; ++b) {
            audit3({a, b}, 0);
            audit3({b, a}, 1);
        }
    }

    auto line = [](const char* name, const AuditTally& t) {
        std::string s = std::string(name) + " " + std::to_string(t.audits - t.failures) + "/" + std::to_string(t.audits);
        if (t.failures) s += " (first failure: " + t.first_failure + ")";
        return s;
    };
    return {p1.failures == 0 && p2.failures == 0 && p3.failures == 0,
            line("prop1", p1) + "; " + line("prop2", p2) + "; " + line("prop3", p3)};
}

Verdict appendix_identities() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t landl = 0, landl_bad = 0;
    for (int n = 0; n <= 5; ++n) {
        for (std::int64_t l = 0; l <= 10; ++l) {
            for (std::int64_t L = n * l; L <= n * l + 50; ++L) {
                ++landl;
                landl_bad += !check_landl(n, L, l).equal;
            }
        }
    }
    std::size_t sigma = 0, sigma_bad = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 2; ++k) {
            for (std::int64_t i = 1; i <= (std::int64_t{1} << k); ++i) {
                ++sigma;
                sigma_bad += !check_sigma(n, k, i).equal;
            }
        }
    }
    std::size_t total_bad = 0;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        total_bad += !check_total(n, k).equal;
        total_bad += !check_total_brute(n, k).equal;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return {landl_bad == 0 && sigma_bad == 0 && total_bad == 0,
            "A1 " + std::to_string(landl - landl_bad) + "/" + std::to_string(landl) + ", A2 " +
                std::to_string(sigma - sigma_bad) + "/" + std::to_string(sigma) + ", total count " +
                std::to_string(6 - total_bad) + "/6 in " + std::to_string(static_cast<int>(ms)) + " ms"};
}

Verdict end_to_end() {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t trials = 50;
    RunConfig few;
    few.n = 2;
    few.q = 8;
    few.samples = 50;
    few.seed = 1;
    RunConfig many = few;
    many.samples = 500;
    const auto rows = run_sweep({few, many}, trials);

    std::size_t zero_ok = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        RunConfig cfg = few;
        cfg.shift = IntVec{0, 0};
        cfg.seed = trial_seed(few.seed, t);
        const RecoveryReport r = run_pipeline(cfg);
        zero_ok += r.zero_shift_detected && r.recovered_u == RealVec{0.0, 0.0};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool enough = rows[1].successes >= 48;
    const bool improves = rows[1].success_rate > rows[0].success_rate;
    const bool zero = zero_ok == trials;
    return {enough && improves && zero && secs < 60.0,
            "m=500: " + std::to_string(rows[1].successes) + "/50 (need >= 48); m=50: " +
                std::to_string(rows[0].successes) + "/50 (m=500 must be strictly higher: " +
                (improves ? "yes" : "no") + "); zero shift " + std::to_string(zero_ok) + "/50; " +
                std::to_string(secs).substr(0, 5) + " s"};
}

Verdict oracle_cross_check() {
    std::size_t bad = 0;
    for (std::int64_t a = 0; a < 16; ++a) {
        for (std::int64_t b = 0; b < 16; ++b) bad += gcd_count({a, b}, 4) != brute_count({a, b}, 4);
    }
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        IntVec u(3);
        for (auto& v : u) v = static_cast<std::int64_t>(rng() % 16);
        bad += gcd_count(u, 4) != brute_count(u, 4);
    }
    return {bad == 0, "456 shifts (256 at n=2, 200 random at n=3), " + std::to_string(bad) + " disagreements"};
}

Verdict sampler_fidelity() {
    const Params p = make_params(1, 4);
    const HiddenShift s = make_shift({2}, p);
    const std::size_t m = 100000;
    const auto samples = draw_samples(s, p, m, std::uint64_t{1});
    const auto ys = filter_c1(samples);
    const ConditionalMass cm = conditional_mass(s, p);

    std::vector<double> observed(p.grid_points(), 0.0);
    for (const auto& y : ys) observed[static_cast<std::size_t>(y[0])] += 1.0;
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = static_cast<double>(ys.size()) * cm.mass[i];
        stat += (observed[i] - expected) * (observed[i] - expected) / expected;
    }
    const double dof = static_cast<double>(observed.size() - 1);
    const double pvalue = boost::math::gamma_q(dof / 2.0, stat / 2.0);

    std::ostringstream a, b;
    write_samples(a, samples, 1);
    write_samples(b, draw_samples(s, p, m, std::uint64_t{1}), 1);
    const bool identical = a.str() == b.str();
    return {pvalue > 1e-3 && identical, "chi2 = " + std::to_string(stat).substr(0, 6) + " on " +
                                            std::to_string(static_cast<int>(dof)) + " dof, p = " + sci(pvalue) +
                                            " (need > 1e-3); repeated stream byte-identical: " +
                                            (identical ? "yes" : "no")};
}

struct Criterion {
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion number(s) to run; all when omitted")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {"closed-form equality", closed_form_equality},
        {"normalization and marginal", normalization},
        {"solution count at the maximizer", lemma_count},
        {"orthogonal probability bound", lemma_bound},
        {"counting maps", propositions},
        {"binomial identities", appendix_identities},
        {"end-to-end recovery", end_to_end},
        {"gcd oracle cross-check", oracle_cross_check},
        {"sampler fidelity", sampler_fidelity},
    };
    if (selected.empty()) {
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
    }

    int failures = 0;
    for (int id : selected) {
        const Criterion& c = criteria[static_cast<std::size_t>(id - 1)];
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        std::printf("[%s] C%d %s: %s\n", v.pass ? "PASS" : "FAIL", id, c.title, v.detail.c_str());
        std::fflush(stdout);
        failures += !v.pass;
    }
    return failures == 0 ? 0 : 1;
}
