#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "stratlab/error.hpp"
#include "stratlab/rng.hpp"

namespace stratlab {

inline constexpr double kMassTolerance = 1e-12;
inline constexpr double kIdentityTolerance = 1e-12;

// Label convention: y in {-1, +1}; slot 0 of a mass cell is y = -1, slot 1 is y = +1.
inline std::size_t label_slot(int label) { return label > 0 ? 1 : 0; }
inline int slot_label(std::size_t slot) { return slot == 1 ? 1 : -1; }

struct Point {
  std::string id;
  std::vector<double> coords;  // may be empty (coordinate-free worlds)
};

// A finite world: points, a cost matrix c(x_i, x_j), and a joint distribution
// over points x labels as a dense mass table.
struct World {
  std::vector<Point> points;
  std::vector<std::vector<double>> cost;       // cost[i][j], square
  std::vector<std::array<double, 2>> mass;     // mass[i] = {P(x_i, -1), P(x_i, +1)}

  std::size_t size() const { return points.size(); }

  double point_mass(std::size_t i) const { return mass[i][0] + mass[i][1]; }

  double total_mass() const {
    double s = 0;
    for (const auto& m : mass) s += m[0] + m[1];
    return s;
  }
};

struct Hypothesis {
  std::string name;
  std::vector<int> labels;  // entries in {-1, +1}, one per world point
};

struct HypothesisClass {
  std::vector<Hypothesis> hypotheses;

  std::size_t size() const { return hypotheses.size(); }
  const Hypothesis& operator[](std::size_t k) const { return hypotheses[k]; }
};

// Distribution over a hypothesis class (a randomised classifier).
struct Mixture {
  std::vector<double> weights;

  static Mixture point_mass(std::size_t k, std::size_t class_size) {
    Mixture q;
    q.weights.assign(class_size, 0.0);
    q.weights[k] = 1.0;
    return q;
  }
};

struct Dataset {
  struct Item {
    std::size_t point;
    int label;  // -1 or +1
  };
  std::vector<Item> items;
  std::uint64_t seed = 0;  // provenance

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
};

// ---------------------------------------------------------------------------
// validation

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

namespace detail {
inline void check_cost(const World& w, ValidationReport& rep) {
  const std::size_t n = w.size();
  if (w.cost.size() != n) {
    rep.violations.push_back({"COST_NOT_SQUARE", "cost has " + std::to_string(w.cost.size()) +
                                                     " rows for " + std::to_string(n) + " points"});
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (w.cost[i].size() != n) {
      rep.violations.push_back({"COST_NOT_SQUARE", "row " + std::to_string(i)});
      return;
    }
    if (w.cost[i][i] != 0.0)
      rep.violations.push_back({"NONZERO_SELF_COST", "cost[" + std::to_string(i) + "][" +
                                                         std::to_string(i) + "] = " +
                                                         std::to_string(w.cost[i][i])});
    for (std::size_t j = 0; j < n; ++j)
      if (!(w.cost[i][j] >= 0.0)) {
        rep.violations.push_back({"NEGATIVE_COST", "cost[" + std::to_string(i) + "][" +
                                                       std::to_string(j) + "]"});
        return;
      }
  }
}
}  // namespace detail

// Collects every invariant violation; an empty report means a valid world.
inline ValidationReport validate_world(const World& w) {
  ValidationReport rep;
  std::set<std::string> ids;
  for (const auto& p : w.points)
    if (!ids.insert(p.id).second)
      rep.violations.push_back({"DUPLICATE_POINT_ID", p.id});

  std::size_t dim = 0;
  bool dim_seen = false;
  for (const auto& p : w.points) {
    if (p.coords.empty()) continue;
    if (!dim_seen) {
      dim = p.coords.size();
      dim_seen = true;
    } else if (p.coords.size() != dim) {
      rep.violations.push_back({"COORD_DIM_MISMATCH", p.id});
    }
  }

  detail::check_cost(w, rep);

  if (w.mass.size() != w.size()) {
    rep.violations.push_back({"MASS_TABLE_SIZE", std::to_string(w.mass.size()) + " rows for " +
                                                     std::to_string(w.size()) + " points"});
  } else {
    double total = 0;
    for (std::size_t i = 0; i < w.mass.size(); ++i) {
      for (std::size_t s = 0; s < 2; ++s) {
        if (!(w.mass[i][s] >= 0.0)) {
          rep.violations.push_back({"NEGATIVE_MASS", w.points[i].id});
          break;
        }
      }
      total += w.mass[i][0] + w.mass[i][1];
    }
    if (std::abs(total - 1.0) > kMassTolerance)
      rep.violations.push_back({"MASS_NOT_NORMALISED", "total " + std::to_string(total)});
  }
  return rep;
}

// Validates hypotheses against a world: label alphabet/length and no duplicate
// label vectors within the class.
inline ValidationReport validate_hypotheses(const World& w, const HypothesisClass& F) {
  ValidationReport rep;
  std::set<std::vector<int>> seen;
  for (const auto& h : F.hypotheses) {
    if (h.labels.size() != w.size()) {
      rep.violations.push_back({"HYPOTHESIS_LENGTH_MISMATCH", h.name});
      continue;
    }
    for (int v : h.labels)
      if (v != 1 && v != -1) {
        rep.violations.push_back({"BAD_LABEL", h.name});
        break;
      }
    if (!seen.insert(h.labels).second)
      rep.violations.push_back({"DUPLICATE_HYPOTHESIS", h.name});
  }
  return rep;
}

inline void require_valid(const World& w) {
  auto rep = validate_world(w);
  if (!rep.valid())
    throw LabError(errc::invalid_world, rep.violations.front().code + " (" +
                                            rep.violations.front().detail + ")");
}

// ---------------------------------------------------------------------------
// cost construction

// cost[i][j] = scale * ||coords_i - coords_j||_2
inline std::vector<std::vector<double>> cost_from_metric(
    const std::vector<std::vector<double>>& coords, double scale) {
  if (scale <= 0.0) throw LabError(errc::config_error, "scale must be positive");
  const std::size_t n = coords.size();
  for (const auto& c : coords)
    if (c.size() != coords.front().size())
      throw LabError(errc::dimension_mismatch, "coordinate dimensions differ");
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s2 = 0;
      for (std::size_t d = 0; d < coords[i].size(); ++d) {
        const double dd = coords[i][d] - coords[j][d];
        s2 += dd * dd;
      }
      const double c = scale * std::sqrt(s2);
      cost[i][j] = c;
      cost[j][i] = c;
    }
  return cost;
}

// ---------------------------------------------------------------------------
// sampling

// n i.i.d. draws from the joint mass table by inverse CDF. Cell enumeration
// order is fixed: point index ascending, label -1 before +1. Draw j uses the
// j-th counter of the stream keyed by `seed`, so identical (world, n, seed)
// yield identical datasets regardless of evaluation order.
inline Dataset sample_dataset(const World& w, std::size_t n, std::uint64_t seed) {
  require_valid(w);
  std::vector<double> cum;
  cum.reserve(2 * w.size());
  double acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t s = 0; s < 2; ++s) {
      acc += w.mass[i][s];
      cum.push_back(acc);
    }
  const double total = acc;

  Dataset ds;
  ds.seed = seed;
  ds.items.reserve(n);
  rng::Stream stream{rng::mix(seed)};
  for (std::size_t j = 0; j < n; ++j) {
    const double u = stream.uniform(j) * total;
    std::size_t lo = 0, hi = cum.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cum[mid] > u)
        hi = mid;
      else
        lo = mid + 1;
    }
    // skip zero-mass cells the search may land on at exact boundaries
    while (lo + 1 < cum.size() && (lo == 0 ? cum[0] : cum[lo] - cum[lo - 1]) <= 0.0) ++lo;
    ds.items.push_back({lo / 2, slot_label(lo % 2)});
  }
  return ds;
}

}  // namespace stratlab
