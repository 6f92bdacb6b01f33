#include "hshift/lattice.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hshift/errors.hpp"

namespace hshift {

std::uint64_t Params::grid_points() const {
    if (static_cast<long long>(n) * q > 63) {
        throw ResourceLimit("grid Z_{2^" + std::to_string(q) + "}^" + std::to_string(n) +
                            " has more than 2^63 points");
    }
    return std::uint64_t{1} << (n * q);
}

Params make_params(int n, int q) {
    if (n < 1) throw InvalidArgument("dimension n must be positive, got " + std::to_string(n));
    if (q < 4 || q % 4 != 0) {
        throw InvalidArgument("q must be a positive multiple of 4, got " + std::to_string(q));
    }
    if (q > 60) throw InvalidArgument("q must be at most 60, got " + std::to_string(q));
    Params p;
    p.n = n;
    p.q = q;
    p.k = q / 4;
    p.delta_big = std::ldexp(1.0, q / 2);
    p.delta_small = std::ldexp(1.0, -q / 2);
    p.grid_size = std::uint64_t{1} << q;
    return p;
}

double window_1d(double x) {
    if (x < 0.0 || x > 1.0) return 0.0;
    return std::numbers::sqrt2 * std::sin(std::numbers::pi * x);
}

double window_nd(std::span<const double> x, const Params& p) {
    if (x.size() != static_cast<std::size_t>(p.n)) {
        throw InvalidArgument("window_nd: expected " + std::to_string(p.n) + " coordinates, got " +
                              std::to_string(x.size()));
    }
    double value = std::pow(p.delta_big, -0.5 * p.n);
    for (double xi : x) value *= window_1d(xi / p.delta_big);
    return value;
}

double window_on_grid(std::span<const std::int64_t> x_tilde, const Params& p) {
    if (x_tilde.size() != static_cast<std::size_t>(p.n)) {
        throw InvalidArgument("window_on_grid: dimension mismatch");
    }
    double value = std::pow(p.delta_big, -0.5 * p.n);
    for (std::int64_t xi : x_tilde) {
        value *= window_1d(std::ldexp(static_cast<double>(xi), -p.q));
    }
    return value;
}

bool HiddenShift::is_zero() const {
    for (auto v : u_tilde) {
        if (v != 0) return false;
    }
    return true;
}

HiddenShift make_shift(const IntVec& u_tilde, const Params& p) {
    if (u_tilde.size() != static_cast<std::size_t>(p.n)) {
        throw InvalidArgument("shift has " + std::to_string(u_tilde.size()) +
                              " coordinates, expected " + std::to_string(p.n));
    }
    HiddenShift s;
    s.u_tilde = u_tilde;
    s.u_real.reserve(u_tilde.size());
    for (auto v : u_tilde) {
        if (v < 0 || v > p.shift_bound()) {
            throw InvalidArgument("shift coordinate " + std::to_string(v) + " outside [0, 2^k] = [0, " +
                                  std::to_string(p.shift_bound()) + "]");
        }
        s.u_real.push_back(static_cast<double>(v) * p.delta_small);
    }
    return s;
}

IntVec OracleModel::index(std::span<const std::int64_t> x_tilde, int c) const {
    IntVec z(x_tilde.size());
    for (std::size_t i = 0; i < x_tilde.size(); ++i) {
        z[i] = reduce_mod(x_tilde[i] - (c ? shift.u_tilde[i] : 0), params.q);
    }
    return z;
}

OracleModel make_oracle(const HiddenShift& shift, const Params& p) {
    if (shift.u_tilde.size() != static_cast<std::size_t>(p.n)) {
        throw InvalidArgument("oracle shift dimension does not match params");
    }
    return OracleModel{p, shift, std::numbers::sqrt2 * p.delta_big};
}

std::uint64_t GridIndexer::pack(std::span<const std::int64_t> v) const {
    std::uint64_t index = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        index = (index << q) | static_cast<std::uint64_t>(reduce_mod(v[i], q));
    }
    return index;
}

IntVec GridIndexer::unpack(std::uint64_t index) const {
    const std::uint64_t mask = (std::uint64_t{1} << q) - 1;
    IntVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index & mask);
        index >>= q;
    }
    return v;
}

std::uint64_t inner_mod(std::span<const std::int64_t> a, std::span<const std::int64_t> b, int q) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[i]);
    }
    return acc & ((std::uint64_t{1} << q) - 1);
}

std::int64_t reduce_mod(std::int64_t value, int q) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(value) & ((std::uint64_t{1} << q) - 1));
}

std::string format_vec(std::span<const std::int64_t> v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    return out.str();
}

IntVec parse_vec(const std::string& text) {
    IntVec v;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(field, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("not an integer: '" + field + "'");
        }
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
        if (used != field.size()) throw InvalidArgument("not an integer: '" + field + "'");
        v.push_back(value);
    }
    if (v.empty()) throw InvalidArgument("empty integer list");
    return v;
}

}  // namespace hshift
