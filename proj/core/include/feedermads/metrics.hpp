/**
 * @file metrics.hpp
 * @brief Bi-objective performance metrics and the Pareto dominance relation.
 *
 * A candidate configuration is scored by a pair (f, h): active power loss in
 * kW and an aggregated constraint-violation degree. Configurations the
 * simulator cannot price (non-radial topology, diverged power flow) carry an
 * infinite loss sentinel that compares above every finite loss, so the
 * dominance relation stays total.
 */

#ifndef FEEDERMADS_METRICS_HPP
#define FEEDERMADS_METRICS_HPP

#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace feedermads {

/**
 * @brief Loss/violation metric pair returned by an evaluation.
 *
 * Invariants: h >= 0; f >= 0 or f == infeasible_loss().
 */
struct Metrics {
  double loss_kw = 0.0;    ///< f: active power loss (kW), +inf when infeasible
  double violation = 0.0;  ///< h: max over all module violations, >= 0

  /// Sentinel loss for configurations without a finite power-flow solution.
  static constexpr double infeasible_loss() {
    return std::numeric_limits<double>::infinity();
  }

  static Metrics infeasible(double violation) {
    return Metrics{infeasible_loss(), violation};
  }

  [[nodiscard]] bool is_infeasible() const { return std::isinf(loss_kw); }
  [[nodiscard]] bool is_feasible() const { return violation == 0.0 && !is_infeasible(); }

  bool operator==(const Metrics& other) const {
    return loss_kw == other.loss_kw && violation == other.violation;
  }
  bool operator!=(const Metrics& other) const { return !(*this == other); }
};

/**
 * @brief Outcome of comparing two metric pairs under bi-objective dominance.
 *
 * Exactly one value holds for every ordered pair, and the relation is
 * antisymmetric: compare(a, b) == FirstDominates iff
 * compare(b, a) == SecondDominates.
 */
enum class DominanceRelation {
  FirstDominates,   ///< a <= b componentwise with at least one strict
  SecondDominates,  ///< b <= a componentwise with at least one strict
  Equal,            ///< identical (f, h)
  Incomparable,     ///< each wins strictly in exactly one component
};

/**
 * @brief Pareto-compares two metric pairs (minimization in both components).
 *
 * The infeasible sentinel is an absorbing maximum for f, so no special case
 * is needed: (inf, h) loses to any finite loss at equal-or-lower h.
 */
inline DominanceRelation compare(const Metrics& a, const Metrics& b) {
  assert(a.violation >= 0.0 && b.violation >= 0.0);
  if (a.loss_kw == b.loss_kw && a.violation == b.violation) {
    return DominanceRelation::Equal;
  }
  if (a.loss_kw <= b.loss_kw && a.violation <= b.violation) {
    return DominanceRelation::FirstDominates;
  }
  if (b.loss_kw <= a.loss_kw && b.violation <= a.violation) {
    return DominanceRelation::SecondDominates;
  }
  return DominanceRelation::Incomparable;
}

/// True iff a dominates b (weak componentwise order with at least one strict).
inline bool dominates(const Metrics& a, const Metrics& b) {
  return compare(a, b) == DominanceRelation::FirstDominates;
}

inline std::string to_string(DominanceRelation r) {
  switch (r) {
    case DominanceRelation::FirstDominates: return "FirstDominates";
    case DominanceRelation::SecondDominates: return "SecondDominates";
    case DominanceRelation::Equal: return "Equal";
    case DominanceRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

}  // namespace feedermads

#endif  // FEEDERMADS_METRICS_HPP
