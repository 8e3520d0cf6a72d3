#include "hcb/barcode_io.hpp"

#include <fstream>
#include <sstream>

#include "hcb/errors.hpp"

namespace hcb {

namespace {

nlohmann::json time_json(const ExtendedRational& t) {
  if (t.is_infinite()) return nullptr;
  return to_fraction_string(t.value());
}

template <typename T>
T field(const nlohmann::json& object, const char* key) {
  if (!object.contains(key)) throw ParseError(std::string("bar is missing '") + key + "'");
  try {
    return object.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad '") + key + "': " + e.what());
  }
}

}  // namespace

nlohmann::json bar_to_json(const Bar& bar, const TimestampMap& tau) {
  nlohmann::json representative = nlohmann::json::object();
  for (const auto& [index, value] : bar.representative.entries()) {
    representative[std::to_string(index + 1)] = to_fraction_string(value);
  }
  return {
      {"degree", bar.degree},
      {"birth_index", bar.birth},
      {"death_index", bar.death},
      {"birth_time", time_json(tau(bar.birth))},
      {"death_time", bar.death_kind == DeathKind::paired ? time_json(tau(bar.death + 1)) : nullptr},
      {"representative", std::move(representative)},
  };
}

nlohmann::json barcode_to_json(const Barcode& barcode, const TimestampMap& tau) {
  nlohmann::json bars = nlohmann::json::array();
  for (const auto& bar : barcode.bars) bars.push_back(bar_to_json(bar, tau));
  return {{"m", barcode.m}, {"bars", std::move(bars)}};
}

Barcode barcode_from_json(const nlohmann::json& document) {
  if (!document.is_object() || !document.contains("bars") || !document["bars"].is_array()) {
    throw ParseError("barcode document needs a 'bars' array");
  }
  Barcode barcode;
  barcode.m = field<std::size_t>(document, "m");
  for (const auto& item : document["bars"]) {
    if (!item.is_object()) throw ParseError("bar entry is not an object");
    Bar bar;
    bar.degree = field<int>(item, "degree");
    bar.birth = field<std::size_t>(item, "birth_index");
    bar.death = field<std::size_t>(item, "death_index");
    bar.death_kind = item.contains("death_time") && !item["death_time"].is_null()
                         ? DeathKind::paired
                         : DeathKind::end_of_filtration;
    std::vector<SparseVector::Entry> entries;
    if (item.contains("representative")) {
      for (const auto& [key, value] : item["representative"].items()) {
        try {
          const std::size_t position = std::stoul(key);
          if (position == 0) throw std::out_of_range("simplex indices start at 1");
          entries.emplace_back(position - 1, parse_rational(value.get<std::string>()));
        } catch (const std::exception& e) {
          throw ParseError("bad representative entry '" + key + "': " + e.what());
        }
      }
    }
    bar.representative = SparseVector::from_entries(std::move(entries));
    barcode.bars.push_back(std::move(bar));
  }
  return barcode;
}

nlohmann::json ordinary_to_json(const std::vector<OrdinaryBar>& bars, std::size_t m,
                                const TimestampMap& tau) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& bar : bars) {
    out.push_back({
        {"degree", bar.degree},
        {"birth_index", bar.birth},
        {"death_index", bar.death},
        {"birth_time", time_json(tau(bar.birth))},
        {"death_time",
         bar.death_kind == DeathKind::paired ? time_json(tau(bar.death + 1)) : nullptr},
    });
  }
  return {{"m", m}, {"bars", std::move(out)}};
}

std::string bar_to_text(const Bar& bar, const TimestampMap& tau, bool with_representative) {
  std::ostringstream out;
  const ExtendedRational death = bar.death_kind == DeathKind::paired
                                     ? tau(bar.death + 1)
                                     : ExtendedRational::infinity();
  out << bar.degree << " [" << bar.birth << ',' << bar.death << "] "
      << to_decimal_string(tau(bar.birth)) << ' ' << to_decimal_string(death);
  if (with_representative) {
    out << " rep:{";
    bool first = true;
    for (const auto& [index, value] : bar.representative.entries()) {
      if (!first) out << ',';
      out << index + 1 << ':' << to_decimal_string(value);
      first = false;
    }
    out << '}';
  }
  return out.str();
}

std::string ordinary_bar_to_text(const OrdinaryBar& bar, const TimestampMap& tau) {
  std::ostringstream out;
  const ExtendedRational death = bar.death_kind == DeathKind::paired
                                     ? tau(bar.death + 1)
                                     : ExtendedRational::infinity();
  out << bar.degree << " [" << bar.birth << ',' << bar.death << "] "
      << to_decimal_string(tau(bar.birth)) << ' ' << to_decimal_string(death);
  return out.str();
}

std::vector<RealInterval> parse_diagram(std::istream& in) {
  std::vector<RealInterval> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string degree;
    std::string birth;
    std::string death;
    if (!(tokens >> degree) || degree.starts_with('#')) continue;
    std::string extra;
    if (!(tokens >> birth >> death) || (tokens >> extra)) {
      throw ParseError("expected '<degree> <birth> <death|inf>'", line_number);
    }
    try {
      RealInterval interval;
      interval.degree = std::stoi(degree);
      interval.birth = parse_rational(birth);
      interval.death = death == "inf" ? ExtendedRational::infinity()
                                      : ExtendedRational(parse_rational(death));
      if (!(ExtendedRational(interval.birth) < interval.death)) {
        throw std::invalid_argument("birth must precede death");
      }
      out.push_back(std::move(interval));
    } catch (const std::logic_error& e) {
      throw ParseError(e.what(), line_number);
    }
  }
  return out;
}

std::vector<RealInterval> intervals_from_json(const nlohmann::json& document) {
  if (!document.is_object() || !document.contains("bars") || !document["bars"].is_array()) {
    throw ParseError("barcode document needs a 'bars' array");
  }
  std::vector<RealInterval> out;
  for (const auto& item : document["bars"]) {
    if (!item.is_object()) throw ParseError("bar entry is not an object");
    RealInterval interval;
    interval.degree = field<int>(item, "degree");
    try {
      interval.birth = parse_rational(field<std::string>(item, "birth_time"));
      interval.death = item.contains("death_time") && !item["death_time"].is_null()
                           ? ExtendedRational(parse_rational(item["death_time"].get<std::string>()))
                           : ExtendedRational::infinity();
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad bar time: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad bar time: ") + e.what());
    }
    if (ExtendedRational(interval.birth) < interval.death) out.push_back(std::move(interval));
  }
  return out;
}

std::vector<RealInterval> parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  in >> std::ws;
  if (in.peek() == '{') {
    try {
      return intervals_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }
  return parse_diagram(in);
}

}  // namespace hcb
