#pragma once

#include "cha/cubicfield.hpp"
#include "cha/quadrep.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cha {

inline constexpr char const* kToolName = "cha";
inline constexpr char const* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Options {
    Reducedness reducedness = Reducedness::Strict;
    Int trial_division_limit = kDefaultTrialDivisionLimit;
};

enum class Outcome { Decided, Rejected, Undecided };

struct Analysis {
    Outcome outcome = Outcome::Decided;
    Json doc;
};

/* Full analysis of one pair. Every integer and rational is a string;
 * the only JSON numbers are small counts and timing_us. */
Analysis analyze(Int const& a, Int const& b, Options const& opts);

std::string render_text(Json const& doc);

inline constexpr char const* kCsvHeader = "a,b,delta,g,case,iw,maximal,verdict,beta1,beta2,beta3";

struct ScanRow {
    std::optional<std::string> line;     // CSV row without newline
    std::optional<std::string> rejected; // rejection reason when invalid
};

ScanRow scan_row(Int const& a, Int const& b, Options const& opts);

} // namespace cha
