#include "hcb/stability.hpp"

#include <algorithm>
#include <optional>

#include "hcb/errors.hpp"
#include "hcb/harmonic_engine.hpp"

namespace hcb {

namespace {

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::optional<Rational> point_cost(const RealInterval& p, const RealInterval& q) {
  if (p.death.is_infinite() != q.death.is_infinite()) return std::nullopt;
  Rational cost = abs_value(p.birth - q.birth);
  if (!p.death.is_infinite()) cost = std::max(cost, abs_value(p.death.value() - q.death.value()));
  return cost;
}

std::optional<Rational> diagonal_cost(const RealInterval& p) {
  if (p.death.is_infinite()) return std::nullopt;
  return Rational((p.death.value() - p.birth) / 2);
}

/// Kuhn's augmenting-path matching on an explicit adjacency list.
class Matcher {
 public:
  explicit Matcher(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right)
      : adjacency_(adjacency), match_right_(right, kNone) {}

  bool perfect() {
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      visited_.assign(match_right_.size(), false);
      if (!augment(u)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t u) {
    for (std::size_t v : adjacency_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] == kNone || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

}  // namespace

ExtendedRational bottleneck_distance(std::span<const RealInterval> a,
                                     std::span<const RealInterval> b) {
  auto infinite = [](std::span<const RealInterval> d) {
    return std::count_if(d.begin(), d.end(), [](const RealInterval& p) { return p.death.is_infinite(); });
  };
  if (infinite(a) != infinite(b)) return ExtendedRational::infinity();
  if (a.empty() && b.empty()) return Rational(0);

  const std::size_t n = a.size();
  const std::size_t k = b.size();
  // Left: a[0..n) then diagonal copies of b. Right: b[0..k) then diagonal copies of a.
  struct Edge {
    std::size_t left;
    std::size_t right;
    Rational cost;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (auto c = point_cost(a[i], b[j])) edges.push_back({i, j, *c});
    }
    if (auto c = diagonal_cost(a[i])) edges.push_back({i, k + i, *c});
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (auto c = diagonal_cost(b[j])) edges.push_back({n + j, j, *c});
    for (std::size_t i = 0; i < n; ++i) edges.push_back({n + j, k + i, Rational(0)});
  }

  std::vector<Rational> candidates;
  candidates.reserve(edges.size());
  for (const auto& e : edges) candidates.push_back(e.cost);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto feasible = [&](const Rational& eps) {
    std::vector<std::vector<std::size_t>> adjacency(n + k);
    for (const auto& e : edges) {
      if (e.cost <= eps) adjacency[e.left].push_back(e.right);
    }
    return Matcher(adjacency, n + k).perfect();
  };

  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == candidates.size()) return ExtendedRational::infinity();
  return candidates[lo];
}

std::map<int, ExtendedRational> bottleneck_by_degree(std::span<const RealInterval> a,
                                                     std::span<const RealInterval> b,
                                                     int max_degree) {
  std::map<int, ExtendedRational> out;
  for (int p = 0; p <= max_degree; ++p) {
    std::vector<RealInterval> da;
    std::vector<RealInterval> db;
    for (const auto& x : a) {
      if (x.degree == p) da.push_back(x);
    }
    for (const auto& x : b) {
      if (x.degree == p) db.push_back(x);
    }
    out[p] = bottleneck_distance(da, db);
  }
  return out;
}

Rational sup_distance(const VertexFunction& f, const VertexFunction& g) {
  if (f.size() != g.size()) throw ParseError("vertex functions have different domains");
  Rational sup = 0;
  for (const auto& [v, value] : f) {
    auto it = g.find(v);
    if (it == g.end()) {
      throw ParseError("vertex " + std::to_string(v) + " missing from the second function");
    }
    sup = std::max(sup, abs_value(value - it->second));
  }
  return sup;
}

StabilityReport stability_experiment(const std::vector<Simplex>& complex, const VertexFunction& f,
                                     const VertexFunction& g) {
  StabilityReport report;
  report.sup_norm = sup_distance(f, g);
  const Filtration ff = lower_star_filtration(complex, f);
  const Filtration fg = lower_star_filtration(complex, g);
  const auto bars_f = to_closed_open(compute_harmonic_barcode(ff), ff.timestamps());
  const auto bars_g = to_closed_open(compute_harmonic_barcode(fg), fg.timestamps());
  report.per_degree = bottleneck_by_degree(bars_f, bars_g, std::max(ff.max_dim(), 0));
  report.max_distance = Rational(0);
  for (const auto& [p, d] : report.per_degree) {
    report.max_distance = std::max(report.max_distance, d);
    if (d > ExtendedRational(report.sup_norm)) report.bound_holds = false;
  }
  return report;
}

}  // namespace hcb
