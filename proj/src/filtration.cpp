#include "hcb/filtration.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hcb/errors.hpp"

namespace hcb {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> out;
  std::string token;
  while (stream >> token) out.push_back(token);
  return out;
}

bool is_skippable(const std::vector<std::string>& tokens) {
  return tokens.empty() || tokens.front().starts_with('#');
}

Vertex parse_vertex(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError("vertex '" + token + "' is not a non-negative integer", line);
  }
  try {
    const unsigned long value = std::stoul(token);
    if (value > 0xffffffffUL) throw std::out_of_range("vertex");
    return static_cast<Vertex>(value);
  } catch (const std::out_of_range&) {
    throw ParseError("vertex '" + token + "' is out of range", line);
  }
}

Rational parse_value(const std::string& token, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

Simplex parse_simplex(const std::vector<std::string>& tokens, std::size_t first,
                      std::size_t line) {
  std::vector<Vertex> vertices;
  for (std::size_t k = first; k < tokens.size(); ++k) {
    vertices.push_back(parse_vertex(tokens[k], line));
  }
  try {
    return Simplex(std::move(vertices));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

void index_steps(const std::vector<FiltrationStep>& steps, std::span<const std::size_t> lines,
                 ComplexIndex& index) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && steps[i].timestamp < steps[i - 1].timestamp) {
      throw ParseError("timestamp decreases", lines[i]);
    }
    if (index.find(steps[i].simplex)) {
      throw ParseError("duplicate simplex " + steps[i].simplex.to_string(), lines[i]);
    }
    try {
      index.add(steps[i].simplex);
    } catch (const MissingFaceError& e) {
      throw ParseError(std::string("face-before-coface violation: ") + e.what(), lines[i]);
    }
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

ExtendedRational TimestampMap::operator()(std::size_t i) const {
  if (i == 0 || i > times_.size() + 1) {
    throw std::out_of_range("timestamp index " + std::to_string(i) + " outside 1.." +
                            std::to_string(times_.size() + 1));
  }
  if (i == times_.size() + 1) return ExtendedRational::infinity();
  return times_[i - 1];
}

Filtration Filtration::from_steps(std::vector<FiltrationStep> steps,
                                  std::span<const std::size_t> source_lines) {
  std::vector<std::size_t> lines(source_lines.begin(), source_lines.end());
  if (lines.size() != steps.size()) {
    lines.resize(steps.size());
    for (std::size_t i = 0; i < lines.size(); ++i) lines[i] = i + 1;
  }
  Filtration result;
  index_steps(steps, lines, result.index_);
  result.steps_ = std::move(steps);
  return result;
}

Filtration Filtration::from_simplices(const std::vector<Simplex>& simplices) {
  std::vector<FiltrationStep> steps;
  steps.reserve(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    steps.push_back({simplices[i], Rational(static_cast<long>(i))});
  }
  return from_steps(std::move(steps));
}

TimestampMap Filtration::timestamps() const {
  std::vector<Rational> times;
  times.reserve(steps_.size());
  for (const auto& step : steps_) times.push_back(step.timestamp);
  return TimestampMap(std::move(times));
}

Filtration parse_filtration(std::istream& in) {
  std::vector<FiltrationStep> steps;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tokens = tokens_of(line);
    if (is_skippable(tokens)) continue;
    if (tokens.size() < 2) throw ParseError("expected '<timestamp> <v0> ... <vk>'", line_number);
    steps.push_back({parse_simplex(tokens, 1, line_number), parse_value(tokens[0], line_number)});
    lines.push_back(line_number);
  }
  return Filtration::from_steps(std::move(steps), lines);
}

Filtration parse_filtration_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_filtration(in);
}

std::string serialize_filtration(const Filtration& filtration) {
  std::string out;
  for (const auto& step : filtration.steps()) {
    const auto& r = step.timestamp;
    out += boost::multiprecision::denominator(r) == 1 ? boost::multiprecision::numerator(r).str()
                                                      : to_fraction_string(r);
    for (Vertex v : step.simplex.vertices()) out += ' ' + std::to_string(v);
    out += '\n';
  }
  return out;
}

VertexFunction parse_vertex_function(std::istream& in) {
  VertexFunction f;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tokens = tokens_of(line);
    if (is_skippable(tokens)) continue;
    if (tokens.size() != 2) throw ParseError("expected '<vertex> <value>'", line_number);
    const Vertex v = parse_vertex(tokens[0], line_number);
    if (!f.emplace(v, parse_value(tokens[1], line_number)).second) {
      throw ParseError("vertex " + tokens[0] + " given twice", line_number);
    }
  }
  return f;
}

VertexFunction parse_vertex_function_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_vertex_function(in);
}

std::vector<Simplex> parse_complex(std::istream& in) {
  std::vector<Simplex> simplices;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tokens = tokens_of(line);
    if (is_skippable(tokens)) continue;
    simplices.push_back(parse_simplex(tokens, 0, line_number));
  }
  return close_under_faces(simplices);
}

std::vector<Simplex> parse_complex_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_complex(in);
}

namespace {

bool by_dim_then_lex(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

}  // namespace

std::vector<Simplex> close_under_faces(const std::vector<Simplex>& simplices) {
  std::set<Simplex> closed;
  std::vector<Simplex> stack(simplices.begin(), simplices.end());
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (!closed.insert(s).second) continue;
    if (s.dim() == 0) continue;
    for (std::size_t q = 0; q < s.vertices().size(); ++q) stack.push_back(s.facet(q));
  }
  std::vector<Simplex> result(closed.begin(), closed.end());
  std::sort(result.begin(), result.end(), by_dim_then_lex);
  return result;
}

Filtration lower_star_filtration(const std::vector<Simplex>& complex, const VertexFunction& f) {
  struct Keyed {
    Rational value;
    const Simplex* simplex;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(complex.size());
  for (const auto& s : complex) {
    Rational value;
    bool first = true;
    for (Vertex v : s.vertices()) {
      auto it = f.find(v);
      if (it == f.end()) throw ParseError("vertex " + std::to_string(v) + " has no function value");
      if (first || value < it->second) value = it->second;
      first = false;
    }
    keyed.push_back({std::move(value), &s});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.value != b.value) return a.value < b.value;
    return by_dim_then_lex(*a.simplex, *b.simplex);
  });
  std::vector<FiltrationStep> steps;
  steps.reserve(keyed.size());
  for (auto& k : keyed) steps.push_back({*k.simplex, std::move(k.value)});
  try {
    return Filtration::from_steps(std::move(steps));
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("complex is not closed under faces: ") + e.what());
  }
}

std::vector<RealInterval> to_closed_open(const Barcode& barcode, const TimestampMap& tau) {
  std::vector<RealInterval> out;
  for (const auto& bar : barcode.bars) {
    ExtendedRational birth = tau(bar.birth);
    ExtendedRational death = tau(bar.death + 1);
    if (birth == death) continue;
    out.push_back({bar.degree, birth.value(), std::move(death)});
  }
  return out;
}

}  // namespace hcb
