#include "feedermads/frontier_filter.hpp"

#include <algorithm>

namespace feedermads {

std::string to_string(FilterDecision::Kind kind) {
  switch (kind) {
    case FilterDecision::Kind::AddedNonDominating: return "added";
    case FilterDecision::Kind::AddedReplacing: return "replaced";
    case FilterDecision::Kind::Rejected: return "rejected";
    case FilterDecision::Kind::RejectedDuplicate: return "duplicate";
  }
  return "?";
}

FilterDecision FrontierFilter::insert(const SwitchVector& x, const Metrics& m) {
  FilterDecision decision;

  for (const FrontierEntry& e : entries_) {
    if (e.m == m) {
      decision.kind = FilterDecision::Kind::RejectedDuplicate;
      decision.existing_id = e.id;
      return decision;
    }
  }

  for (const FrontierEntry& e : entries_) {
    if (dominates(e.m, m)) {
      decision.kind = FilterDecision::Kind::Rejected;
      decision.dominator_id = e.id;
      return decision;
    }
  }

  for (const FrontierEntry& e : entries_) {
    if (dominates(m, e.m)) decision.removed_ids.push_back(e.id);
  }
  if (!decision.removed_ids.empty()) {
    decision.kind = FilterDecision::Kind::AddedReplacing;
    std::erase_if(entries_, [&m](const FrontierEntry& e) {
      return dominates(m, e.m);
    });
  } else {
    decision.kind = FilterDecision::Kind::AddedNonDominating;
  }
  entries_.push_back(FrontierEntry{next_id_++, x, m});
  return decision;
}

const FrontierEntry* FrontierFilter::find(int id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [id](const FrontierEntry& e) { return e.id == id; });
  return it == entries_.end() ? nullptr : &*it;
}

bool is_pareto_consistent(const FrontierFilter& filter) {
  const auto& entries = filter.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (i == j) continue;
      if (compare(entries[i].m, entries[j].m) != DominanceRelation::Incomparable) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace feedermads
