#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hshift/binomial.hpp"
#include "hshift/orthogonality.hpp"
#include "hshift/pipeline.hpp"
#include "hshift/spectrum.hpp"

namespace hshift {

/// Sample file: header "c,y1,...,yn", then one "c,y1,...,yn" record per line.
void write_samples(std::ostream& out, const std::vector<Sample>& samples, int n);

struct SampleFile {
    int n = 0;
    std::vector<Sample> samples;
};

/// Parses a sample file; coordinates must lie in [0, 2^q) when q > 0.
SampleFile read_samples(std::istream& in, int q = 0);

/// Shortest decimal string that parses back to the same double.
std::string format_real(double value);

nlohmann::json to_json(const RecoveryReport& report);
nlohmann::json to_json(const CountReport& report);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const SweepRow& row);

extern const std::vector<std::string> kSweepColumns;
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace hshift
