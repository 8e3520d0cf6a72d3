#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hcb/barcode.hpp"
#include "hcb/filtration.hpp"
#include "hcb/ordinary_persistence.hpp"

namespace hcb {

/// One bar as
///   {degree, birth_index, death_index, birth_time, death_time|null,
///    representative: {"<insertion index>": "p/q", ...}}
/// Times are tau(birth) and tau(death + 1) as `p/q` strings; death_time is
/// null for bars alive at the end of the filtration. Representative keys are
/// 1-based insertion indices, like birth_index.
nlohmann::json bar_to_json(const Bar& bar, const TimestampMap& tau);

/// {"m": m, "bars": [...]}
nlohmann::json barcode_to_json(const Barcode& barcode, const TimestampMap& tau);

/// Inverse of barcode_to_json. A bar is unpaired iff death_time is null.
/// Throws ParseError on schema violations.
Barcode barcode_from_json(const nlohmann::json& document);

nlohmann::json ordinary_to_json(const std::vector<OrdinaryBar>& bars, std::size_t m,
                                const TimestampMap& tau);

/// `p [b,d] t_birth t_death` plus ` rep:{id:coeff,...}` when requested.
std::string bar_to_text(const Bar& bar, const TimestampMap& tau, bool with_representative);
std::string ordinary_bar_to_text(const OrdinaryBar& bar, const TimestampMap& tau);

/// Diagram text format: `<degree> <birth> <death|inf>` per line.
std::vector<RealInterval> parse_diagram(std::istream& in);
/// Closed-open intervals read from the times of a barcode document; bars
/// whose two times coincide are dropped.
std::vector<RealInterval> intervals_from_json(const nlohmann::json& document);
/// Accepts either the text format or a barcode JSON document.
std::vector<RealInterval> parse_diagram_file(const std::string& path);

}  // namespace hcb
