#include "hshift/report_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "hshift/errors.hpp"

namespace hshift {

void write_samples(std::ostream& out, const std::vector<Sample>& samples, int n) {
    out << 'c';
    for (int i = 1; i <= n; ++i) out << ",y" << i;
    out << '\n';
    for (const auto& s : samples) {
        if (s.y_tilde.size() != static_cast<std::size_t>(n)) throw InvalidArgument("sample dimension mismatch");
        out << s.c << ',' << format_vec(s.y_tilde) << '\n';
    }
}

SampleFile read_samples(std::istream& in, int q) {
    SampleFile file;
    std::string line;
    if (!std::getline(in, line)) throw InvalidArgument("sample file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream header(line);
        std::string field;
        std::getline(header, field, ',');
        if (field != "c") throw InvalidArgument("sample file header must start with 'c'");
        while (std::getline(header, field, ',')) {
            if (field != "y" + std::to_string(file.n + 1)) {
                throw InvalidArgument("unexpected header column '" + field + "'");
            }
            ++file.n;
        }
        if (file.n == 0) throw InvalidArgument("sample file header has no y columns");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        IntVec fields;
        try {
            fields = parse_vec(line);
        } catch (const InvalidArgument& e) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (fields.size() != static_cast<std::size_t>(file.n) + 1) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": expected " + std::to_string(file.n + 1) +
                                  " fields");
        }
        if (fields[0] != 0 && fields[0] != 1) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": c must be 0 or 1");
        }
        Sample s{IntVec(fields.begin() + 1, fields.end()), static_cast<int>(fields[0])};
        for (auto y : s.y_tilde) {
            if (y < 0 || (q > 0 && y >= (std::int64_t{1} << q))) {
                throw InvalidArgument("line " + std::to_string(line_no) + ": coordinate " + std::to_string(y) +
                                      " outside [0, 2^q)");
            }
        }
        file.samples.push_back(std::move(s));
    }
    return file;
}

std::string format_real(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, end);
}

nlohmann::json to_json(const RecoveryReport& report) {
    nlohmann::json j;
    j["planted_u_tilde"] = report.planted_u_tilde;
    j["recovered_u_tilde"] = report.recovered_u_tilde;
    j["recovered_u"] = report.recovered_u;
    j["zero_shift_detected"] = report.zero_shift_detected;
    j["sample_count_drawn"] = report.sample_count_drawn;
    j["sample_count_used"] = report.sample_count_used;
    j["strategy"] = to_string(report.strategy);
    j["log_likelihood"] = report.log_likelihood ? nlohmann::json(*report.log_likelihood) : nlohmann::json();
    j["candidate_set_size"] =
        report.candidate_set_size ? nlohmann::json(*report.candidate_set_size) : nlohmann::json();
    j["success"] = report.planted_u_tilde.empty() ? nlohmann::json() : nlohmann::json(report.success());
    return j;
}

nlohmann::json to_json(const CountReport& report) {
    return {{"u_tilde", report.u_tilde},
            {"q", report.q},
            {"count", report.count.str()},
            {"method", to_string(report.method)}};
}

nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : report.parameters) params[name] = value;
    return {{"identity", report.name},
            {"parameters", params},
            {"lhs", report.lhs.str()},
            {"rhs", report.rhs.str()},
            {"equal", report.equal}};
}

nlohmann::json to_json(const SweepRow& row) {
    return {{"n", row.n},
            {"q", row.q},
            {"k", row.k},
            {"u_tilde", row.u_tilde},
            {"m", row.m},
            {"trials", row.trials},
            {"successes", row.successes},
            {"success_rate", row.success_rate},
            {"mean_orthogonal_sample_fraction", row.mean_orthogonal_sample_fraction},
            {"wall_time", row.wall_time},
            {"status", row.status}};
}

const std::vector<std::string> kSweepColumns = {
    "n",         "q",         "k",
    "u_tilde",   "m",         "trials",
    "successes", "success_rate", "mean_orthogonal_sample_fraction",
    "wall_time", "status"};

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    for (std::size_t i = 0; i < kSweepColumns.size(); ++i) out << (i ? "," : "") << kSweepColumns[i];
    out << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.q << ',' << r.k << ',' << csv_quote(r.u_tilde) << ',' << r.m << ',' << r.trials << ','
            << r.successes << ',' << format_real(r.success_rate) << ','
            << format_real(r.mean_orthogonal_sample_fraction) << ',' << format_real(r.wall_time) << ','
            << csv_quote(r.status) << '\n';
    }
}

}  // namespace hshift
