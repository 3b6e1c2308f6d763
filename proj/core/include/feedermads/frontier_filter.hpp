/**
 * @file frontier_filter.hpp
 * @brief Ordered archive of mutually non-dominated candidates.
 *
 * The filter keeps every evaluated candidate that is not dominated by a
 * current member. Inserting a candidate either appends it (possibly evicting
 * the members it dominates) or rejects it, and reports which via a
 * FilterDecision. Entries keep insertion order and carry unique, increasing
 * ids; ids are only assigned to accepted candidates.
 */

#ifndef FEEDERMADS_FRONTIER_FILTER_HPP
#define FEEDERMADS_FRONTIER_FILTER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "feedermads/metrics.hpp"
#include "feedermads/switch_vector.hpp"

namespace feedermads {

/**
 * @brief Result of one insert attempt.
 *
 * Payload fields are meaningful only for the matching kind: removed_ids for
 * AddedReplacing, dominator_id for Rejected, existing_id for
 * RejectedDuplicate. Unused ids stay -1, unused lists stay empty.
 */
struct FilterDecision {
  enum class Kind {
    AddedNonDominating,  ///< appended; no member was dominated either way
    AddedReplacing,      ///< appended after evicting every dominated member
    Rejected,            ///< a member weakly dominates the candidate
    RejectedDuplicate,   ///< a member has the exact same (f, h)
  };

  Kind kind = Kind::AddedNonDominating;
  std::vector<int> removed_ids;  ///< evicted member ids, insertion order
  int dominator_id = -1;         ///< earliest member dominating the candidate
  int existing_id = -1;          ///< earliest member with identical metrics

  [[nodiscard]] bool accepted() const {
    return kind == Kind::AddedNonDominating || kind == Kind::AddedReplacing;
  }
};

/// Trace spelling of a decision kind: added/replaced/rejected/duplicate.
std::string to_string(FilterDecision::Kind kind);

/// One archive member.
struct FrontierEntry {
  int id = 0;        ///< unique, increasing with insertion sequence
  SwitchVector x;    ///< candidate switch states
  Metrics m;         ///< its evaluated metrics
};

/**
 * @brief Mutable Pareto-frontier archive with value semantics.
 *
 * Safe to copy and to hand between threads; concurrent mutation of one
 * instance is not supported.
 */
class FrontierFilter {
 public:
  /**
   * @brief Attempts to admit a candidate.
   *
   * Precedence: an exact metric duplicate is rejected first; then any member
   * weakly dominating the candidate (with at least one strict inequality)
   * rejects it; then every member the candidate dominates is evicted and the
   * candidate is appended; otherwise the candidate is appended alongside the
   * incomparable members. Duplicate and dominator ids refer to the earliest
   * matching member.
   */
  FilterDecision insert(const SwitchVector& x, const Metrics& m);

  [[nodiscard]] const std::vector<FrontierEntry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  /// Entry with the given id, or nullptr if it is not (or no longer) present.
  [[nodiscard]] const FrontierEntry* find(int id) const;

 private:
  std::vector<FrontierEntry> entries_;
  int next_id_ = 0;
};

/// True iff every pair of distinct entries is mutually non-dominated.
[[nodiscard]] bool is_pareto_consistent(const FrontierFilter& filter);

}  // namespace feedermads

#endif  // FEEDERMADS_FRONTIER_FILTER_HPP
