#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hshift/orthogonality.hpp"

namespace hshift {

/// C(a, b) for a >= 0; zero when b > a.
BigInt binom(const BigInt& a, std::uint64_t b);

/// Binomial coefficient as the degree-b polynomial a(a-1)...(a-b+1)/b!,
/// defined for every integer a. Agrees with binom() when a >= 0.
BigInt binom_poly(const BigInt& a, std::uint64_t b);

/// Both sides of the lowering identity
///   sum_i (-1)^i C(n,i) C(L - i l, n) = sum_i (-1)^i C(n,i) C(L - i l - 1, n),
/// requires L >= n l. Upper arguments may reach -1, so binom_poly is used.
std::pair<BigInt, BigInt> landl_pair(int n, std::int64_t L, std::int64_t l);

/// sum_{j=0}^{n-1} (-1)^j C(n-1, j) C(n-1 + (n-j) 2^{4k} - i 2^{3k}, n-1), 1 <= i <= 2^k.
BigInt sigma_sum(int n, int k, std::int64_t i);

/// sum_{i=1}^{2^k} sigma_sum(n, k, i): the inclusion-exclusion count of
/// y in Z_{2^{4k}}^n with 2^k (y_1 + ... + y_n) = 0 mod 2^{4k}.
BigInt total_count(int n, int k);

/// The two printed forms of the closed-form count at u = (2^k, ..., 2^k).
enum class CountDisplay {
    fixed_offset,   // 2^k sum_i (-1)^i C(n-1,i) C(n-1 + (n-i) 2^{4k} - 2^{3k}, n-1)
    indexed_offset  // same with -i 2^{3k}, i the summation index
};

BigInt displayed_count(int n, int k, CountDisplay form);

struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

IdentityReport check_landl(int n, std::int64_t L, std::int64_t l);
IdentityReport check_sigma(int n, int k, std::int64_t i);
/// total_count(n,k) against 2^{k(4n-3)}.
IdentityReport check_total(int n, int k);
/// total_count(n,k) against brute-force enumeration at (2^k, ..., 2^k), q = 4k.
IdentityReport check_total_brute(int n, int k, std::uint64_t ceiling = kDefaultEnumCeiling);

}  // namespace hshift
