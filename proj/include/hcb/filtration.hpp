#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hcb/barcode.hpp"
#include "hcb/complex.hpp"
#include "hcb/rational.hpp"

namespace hcb {

struct FiltrationStep {
  Simplex simplex;
  Rational timestamp;
  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// tau(i) = timestamp at which K_i is complete, i.e. the timestamp of the
/// (i-1)-th inserted simplex, for 1 <= i <= m. tau(m+1) is +infinity.
class TimestampMap {
 public:
  TimestampMap() = default;
  explicit TimestampMap(std::vector<Rational> step_times) : times_(std::move(step_times)) {}

  std::size_t m() const { return times_.size(); }
  /// Defined for 1 <= i <= m + 1. Throws std::out_of_range otherwise.
  ExtendedRational operator()(std::size_t i) const;

 private:
  std::vector<Rational> times_;
};

/// Validated simplex-wise filtration: faces precede cofaces, no duplicates,
/// non-decreasing timestamps. Immutable after construction.
class Filtration {
 public:
  Filtration() = default;
  /// Throws ParseError on any violation. The error names `source_lines[i]`
  /// for step i when given, otherwise i + 1.
  static Filtration from_steps(std::vector<FiltrationStep> steps,
                               std::span<const std::size_t> source_lines = {});
  /// Timestamps default to the step position.
  static Filtration from_simplices(const std::vector<Simplex>& simplices);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const FiltrationStep& operator[](std::size_t i) const { return steps_[i]; }
  const std::vector<FiltrationStep>& steps() const { return steps_; }
  const ComplexIndex& index() const { return index_; }
  int max_dim() const { return index_.max_dim(); }
  TimestampMap timestamps() const;

  friend bool operator==(const Filtration& a, const Filtration& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<FiltrationStep> steps_;
  ComplexIndex index_;
};

/// Reads `<timestamp> <v0> ... <vk>` lines; `#` starts a comment line.
/// Global simplex index = order of appearance.
Filtration parse_filtration(std::istream& in);
Filtration parse_filtration_file(const std::string& path);
std::string serialize_filtration(const Filtration& filtration);

using VertexFunction = std::map<Vertex, Rational>;

/// Reads `<vertex> <value>` lines.
VertexFunction parse_vertex_function(std::istream& in);
VertexFunction parse_vertex_function_file(const std::string& path);

/// Reads one simplex per line (vertex lists) and closes the family under
/// faces. Result is sorted by (dimension, lexicographic vertices).
std::vector<Simplex> parse_complex(std::istream& in);
std::vector<Simplex> parse_complex_file(const std::string& path);
std::vector<Simplex> close_under_faces(const std::vector<Simplex>& simplices);

/// Lower-star filtration of `f`: each simplex takes the max of its vertex
/// values and simplices are ordered by (value, dimension, lexicographic
/// vertices). Timestamps are the simplex values. Throws ParseError if a
/// vertex has no value, std::invalid_argument if the complex is not closed.
Filtration lower_star_filtration(const std::vector<Simplex>& complex, const VertexFunction& f);

/// Maps [b, d] to [tau(b), tau(d+1)); intervals that collapse to a point
/// are dropped. Unpaired bars ([b, m]) map to [tau(b), +inf).
std::vector<RealInterval> to_closed_open(const Barcode& barcode, const TimestampMap& tau);

}  // namespace hcb
