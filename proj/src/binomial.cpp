#include "hshift/binomial.hpp"

#include "hshift/errors.hpp"

namespace hshift {

BigInt binom(const BigInt& a, std::uint64_t b) {
    if (a < 0) throw InvalidArgument("binom: negative upper argument");
    if (BigInt(b) > a) return 0;
    return binom_poly(a, b);
}

BigInt binom_poly(const BigInt& a, std::uint64_t b) {
    // Running product stays integral: after step j it equals C(a, j+1).
    BigInt result = 1;
    for (std::uint64_t j = 0; j < b; ++j) {
        result *= a - j;
        result /= j + 1;
    }
    return result;
}

namespace {

BigInt sign(std::int64_t i) { return (i % 2 == 0) ? BigInt(1) : BigInt(-1); }

BigInt pow2(std::int64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

void check_nk(int n, int k) {
    if (n < 1 || k < 1) throw InvalidArgument("need n >= 1 and k >= 1");
    if (k > 15) throw InvalidArgument("k must be at most 15");
}

}  // namespace

std::pair<BigInt, BigInt> landl_pair(int n, std::int64_t L, std::int64_t l) {
    if (n < 0 || l < 0) throw InvalidArgument("landl_pair: need n >= 0 and l >= 0");
    if (L < static_cast<std::int64_t>(n) * l) throw InvalidArgument("landl_pair: need L >= n*l");
    BigInt lhs = 0;
    BigInt rhs = 0;
    const auto un = static_cast<std::uint64_t>(n);
    for (int i = 0; i <= n; ++i) {
        const BigInt coeff = sign(i) * binom(n, static_cast<std::uint64_t>(i));
        lhs += coeff * binom_poly(BigInt(L - i * l), un);
        rhs += coeff * binom_poly(BigInt(L - i * l - 1), un);
    }
    return {lhs, rhs};
}

BigInt sigma_sum(int n, int k, std::int64_t i) {
    check_nk(n, k);
    if (i < 1 || i > (std::int64_t{1} << k)) throw InvalidArgument("sigma_sum: i must lie in [1, 2^k]");
    const auto m = static_cast<std::uint64_t>(n - 1);
    BigInt sum = 0;
    for (int j = 0; j < n; ++j) {
        const BigInt upper = BigInt(n - 1) + (n - j) * pow2(4 * k) - i * pow2(3 * k);
        sum += sign(j) * binom(m, static_cast<std::uint64_t>(j)) * binom(upper, m);
    }
    return sum;
}

BigInt total_count(int n, int k) {
    check_nk(n, k);
    BigInt total = 0;
    for (std::int64_t i = 1; i <= (std::int64_t{1} << k); ++i) total += sigma_sum(n, k, i);
    return total;
}

BigInt displayed_count(int n, int k, CountDisplay form) {
    check_nk(n, k);
    const auto m = static_cast<std::uint64_t>(n - 1);
    BigInt sum = 0;
    for (int i = 0; i < n; ++i) {
        const BigInt offset = form == CountDisplay::fixed_offset ? pow2(3 * k) : i * pow2(3 * k);
        const BigInt upper = BigInt(n - 1) + (n - i) * pow2(4 * k) - offset;
        sum += sign(i) * binom(m, static_cast<std::uint64_t>(i)) * binom_poly(upper, m);
    }
    return pow2(k) * sum;
}

IdentityReport check_landl(int n, std::int64_t L, std::int64_t l) {
    auto [lhs, rhs] = landl_pair(n, L, l);
    return {"landl", {{"n", n}, {"L", L}, {"l", l}}, lhs, rhs, lhs == rhs};
}

IdentityReport check_sigma(int n, int k, std::int64_t i) {
    BigInt lhs = sigma_sum(n, k, i);
    BigInt rhs = pow2(4 * k * (n - 1));
    return {"sigma", {{"n", n}, {"k", k}, {"i", i}}, lhs, rhs, lhs == rhs};
}

IdentityReport check_total(int n, int k) {
    BigInt lhs = total_count(n, k);
    BigInt rhs = lemma_max_count(n, k);
    return {"total", {{"n", n}, {"k", k}}, lhs, rhs, lhs == rhs};
}

IdentityReport check_total_brute(int n, int k, std::uint64_t ceiling) {
    BigInt lhs = total_count(n, k);
    BigInt rhs = brute_count(IntVec(static_cast<std::size_t>(n), std::int64_t{1} << k), 4 * k, ceiling);
    return {"total-brute", {{"n", n}, {"k", k}}, lhs, rhs, lhs == rhs};
}

}  // namespace hshift
