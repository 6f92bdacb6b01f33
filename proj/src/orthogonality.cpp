#include "hshift/orthogonality.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "hshift/errors.hpp"

namespace hshift {

std::string to_string(CountMethod method) {
    switch (method) {
        case CountMethod::brute: return "brute";
        case CountMethod::gcd_formula: return "gcd-formula";
        case CountMethod::lemma_formula: return "lemma-formula";
    }
    return "unknown";
}

namespace {

__extension__ using Wide = __int128;

void check_q(int q) {
    if (q < 1 || q > 62) throw InvalidArgument("modulus exponent q must be in [1, 62], got " + std::to_string(q));
}

std::uint64_t enumeration_size(std::size_t n, int q, std::uint64_t ceiling) {
    if (n == 0) throw InvalidArgument("shift vector is empty");
    if (static_cast<long long>(n) * q > 63 || (std::uint64_t{1} << (n * static_cast<std::size_t>(q))) > ceiling) {
        throw ResourceLimit("enumeration of Z_{2^" + std::to_string(q) + "}^" + std::to_string(n) +
                            " exceeds ceiling " + std::to_string(ceiling));
    }
    return std::uint64_t{1} << (n * static_cast<std::size_t>(q));
}

// Odometer over Z_{2^q}^n keeping <u,y> mod 2^q up to date.
template <class Visit>
void for_each_point(const IntVec& u, int q, std::uint64_t ceiling, Visit&& visit) {
    const std::uint64_t total = enumeration_size(u.size(), q, ceiling);
    const std::uint64_t mask = (std::uint64_t{1} << q) - 1;
    IntVec y(u.size(), 0);
    std::uint64_t dot = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
        visit(y, dot & mask);
        for (std::size_t i = 0; i < y.size(); ++i) {
            dot += static_cast<std::uint64_t>(u[i]);
            if (static_cast<std::uint64_t>(++y[i]) <= mask) break;
            dot -= static_cast<std::uint64_t>(u[i]) << q;
            y[i] = 0;
        }
    }
}

IntVec reduced(const IntVec& v, int q) {
    IntVec out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [q](std::int64_t x) { return reduce_mod(x, q); });
    return out;
}

void require_solution(const IntVec& y, const IntVec& u, int q, const char* who) {
    if (y.size() != u.size()) throw InvalidArgument(std::string(who) + ": y and u differ in length");
    if (inner_mod(u, y, q) != 0) {
        throw InvalidArgument(std::string(who) + ": y = (" + format_vec(y) + ") does not solve <u,y> = 0 mod 2^q");
    }
}

}  // namespace

BigInt brute_count(const IntVec& u_tilde, int q, std::uint64_t ceiling) {
    check_q(q);
    const IntVec u = reduced(u_tilde, q);
    std::uint64_t hits = 0;
    for_each_point(u, q, ceiling, [&](const IntVec&, std::uint64_t dot) { hits += dot == 0; });
    return BigInt(hits);
}

BigInt gcd_count(const IntVec& u_tilde, int q) {
    check_q(q);
    if (u_tilde.empty()) throw InvalidArgument("shift vector is empty");
    std::uint64_t g = std::uint64_t{1} << q;
    for (auto ui : u_tilde) g = std::gcd(g, static_cast<std::uint64_t>(reduce_mod(ui, q)));
    return (BigInt(1) << (q * static_cast<int>(u_tilde.size() - 1))) * g;
}

BigInt lemma_max_count(int n, int k) {
    if (n < 1 || k < 1) throw InvalidArgument("lemma_max_count needs n >= 1 and k >= 1");
    return BigInt(1) << (k * (4 * n - 3));
}

std::vector<IntVec> solution_set(const IntVec& u_tilde, int q, std::uint64_t ceiling) {
    check_q(q);
    const IntVec u = reduced(u_tilde, q);
    std::vector<IntVec> out;
    for_each_point(u, q, ceiling, [&](const IntVec& y, std::uint64_t dot) {
        if (dot == 0) out.push_back(y);
    });
    return out;
}

MappedSolution prop1_map(const IntVec& y_tilde, const IntVec& u_tilde, std::size_t i, int q) {
    check_q(q);
    const IntVec u = reduced(u_tilde, q);
    if (i >= u.size()) throw InvalidArgument("prop1_map: index out of range");
    std::size_t partner = u.size();
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (j != i && u[j] == u[i]) {
            partner = j;
            break;
        }
    }
    if (partner == u.size()) throw InvalidArgument("prop1_map: coordinate " + std::to_string(i) + " is not repeated");
    const IntVec y = reduced(y_tilde, q);
    require_solution(y, u, q, "prop1_map");

    MappedSolution out{u, y};
    out.u_prime[i] = reduce_mod(2 * u[i], q);
    if (y[i] % 2 == 0) {
        out.y_prime[i] = y[i] / 2;
    } else {
        out.y_prime[i] = (y[i] + 1) / 2;
        out.y_prime[partner] = reduce_mod(y[partner] - 1, q);
    }
    return out;
}

MappedSolution prop2_map(const IntVec& y_tilde, const IntVec& u_tilde, int q) {
    check_q(q);
    const IntVec u = reduced(u_tilde, q);
    if (u.size() < 2) throw InvalidArgument("prop2_map: needs at least two coordinates");
    std::vector<int> exponent(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0 || !std::has_single_bit(static_cast<std::uint64_t>(u[i]))) {
            throw InvalidArgument("prop2_map: coordinate " + std::to_string(u[i]) + " is not a power of two");
        }
        exponent[i] = std::countr_zero(static_cast<std::uint64_t>(u[i]));
    }
    std::vector<std::size_t> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return exponent[a] < exponent[b]; });
    const std::size_t lowest = order[0];
    const int raise = exponent[order[1]] - exponent[lowest];

    const IntVec y = reduced(y_tilde, q);
    require_solution(y, u, q, "prop2_map");
    if (y[lowest] % (std::int64_t{1} << raise) != 0) {
        throw InvalidArgument("prop2_map: y_" + std::to_string(lowest) + " = " + std::to_string(y[lowest]) +
                              " is not a multiple of 2^" + std::to_string(raise));
    }
    MappedSolution out{u, y};
    out.u_prime[lowest] = std::int64_t{1} << exponent[order[1]];
    out.y_prime[lowest] = y[lowest] >> raise;
    return out;
}

MappedSolution prop3_map(const IntVec& y_tilde, const IntVec& u_tilde, std::size_t j, int q) {
    check_q(q);
    const IntVec u = reduced(u_tilde, q);
    if (j >= u.size()) throw InvalidArgument("prop3_map: index out of range");
    if (u[j] == 0) throw InvalidArgument("prop3_map: coordinate is zero");
    const int t = std::countr_zero(static_cast<std::uint64_t>(u[j]));
    const Wide v = u[j] >> t;
    if (v == 1) throw InvalidArgument("prop3_map: coordinate is already a power of two");

    const IntVec y = reduced(y_tilde, q);
    require_solution(y, u, q, "prop3_map");

    const Wide period = Wide{1} << (q - t);
    const Wide high = y[j] / period;
    const Wide low = y[j] % period;
    auto floor_seg = [&](Wide l) { return l * period / v; };

    // Segment l with floor(l M / v) <= low < floor((l+1) M / v).
    Wide l = low * v / period;
    while (l + 1 < v && floor_seg(l + 1) <= low) ++l;
    while (l > 0 && floor_seg(l) > low) --l;
    const Wide r = l * period - v * floor_seg(l);
    Wide moved = v * (low - floor_seg(l)) - r;
    moved %= period;
    if (moved < 0) moved += period;

    MappedSolution out{u, y};
    out.u_prime[j] = std::int64_t{1} << t;
    out.y_prime[j] = static_cast<std::int64_t>(high * period + moved);
    return out;
}

MapAudit audit_map(const IntVec& u_tilde, const IntVec& u_prime, int q, const SolutionMap& map,
                   std::uint64_t ceiling) {
    const IntVec target = reduced(u_prime, q);
    const std::vector<IntVec> domain = solution_set(u_tilde, q, ceiling);
    const std::vector<IntVec> codomain = solution_set(target, q, ceiling);
    const std::set<IntVec> codomain_set(codomain.begin(), codomain.end());

    MapAudit audit;
    audit.domain_size = domain.size();
    audit.codomain_size = codomain.size();
    std::set<IntVec> image;
    for (const IntVec& y : domain) {
        const MappedSolution m = map(y);
        if (reduced(m.u_prime, q) != target || !codomain_set.contains(m.y_prime)) audit.lands_in_codomain = false;
        if (inner_mod(reduced(u_tilde, q), y, q) != inner_mod(reduced(m.u_prime, q), m.y_prime, q)) {
            audit.preserves_inner_product = false;
        }
        if (!image.insert(m.y_prime).second) ++audit.collisions;
    }
    audit.image_size = image.size();
    return audit;
}

}  // namespace hshift
