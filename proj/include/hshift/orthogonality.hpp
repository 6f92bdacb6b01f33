#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hshift/lattice.hpp"

namespace hshift {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { brute, gcd_formula, lemma_formula };

std::string to_string(CountMethod method);

struct CountReport {
    IntVec u_tilde;
    int q = 0;
    BigInt count;
    CountMethod method = CountMethod::brute;
};

/// |{y in Z_{2^q}^n : <u,y> = 0 mod 2^q}| by exhaustive enumeration.
/// Coordinates of u are taken mod 2^q.
BigInt brute_count(const IntVec& u_tilde, int q, std::uint64_t ceiling = kDefaultEnumCeiling);

/// 2^{q(n-1)} * gcd(2^q, u_1, ..., u_n).
BigInt gcd_count(const IntVec& u_tilde, int q);

/// 2^{k(4n-3)}, the solution count at u = (2^k, ..., 2^k), q = 4k.
BigInt lemma_max_count(int n, int k);

/// All solutions of <u,y> = 0 mod 2^q, in packed lexicographic order.
std::vector<IntVec> solution_set(const IntVec& u_tilde, int q, std::uint64_t ceiling = kDefaultEnumCeiling);

/// Image of a solution under one of the counting maps, with the shift it solves for.
struct MappedSolution {
    IntVec u_prime;
    IntVec y_prime;
};

/// Doubles coordinate i of a shift whose coordinate i is repeated at some
/// j != i (the first such j is the partner). y_i = 2m maps to m; y_i = 2m - 1
/// maps to m and decrements y_j.
MappedSolution prop1_map(const IntVec& y_tilde, const IntVec& u_tilde, std::size_t i, int q);

/// For u = (2^{t_1}, ..., 2^{t_n}): raises the smallest exponent to the next
/// one in ascending order (lowest index first on ties) and divides that
/// coordinate of y by 2^{t_next - t_min}.
MappedSolution prop2_map(const IntVec& y_tilde, const IntVec& u_tilde, int q);

/// For u_j = v 2^t with v odd, v > 1: replaces u_j by 2^t and moves y_j
/// through the piecewise map y -> v (y - floor(l M / v)) - r_l, M = 2^{q-t},
/// applied to y_j mod M; the multiple of M above it is kept.
MappedSolution prop3_map(const IntVec& y_tilde, const IntVec& u_tilde, std::size_t j, int q);

/// Exhaustive audit of a solution-set map.
struct MapAudit {
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    std::size_t image_size = 0;
    std::size_t collisions = 0;
    bool lands_in_codomain = true;
    bool preserves_inner_product = true;

    bool injective() const { return collisions == 0; }
    bool surjective() const { return image_size == codomain_size; }
};

using SolutionMap = std::function<MappedSolution(const IntVec& y)>;

MapAudit audit_map(const IntVec& u_tilde, const IntVec& u_prime, int q, const SolutionMap& map,
                   std::uint64_t ceiling = kDefaultEnumCeiling);

}  // namespace hshift
