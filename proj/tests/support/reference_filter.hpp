// Naive reference archive used to cross-check FrontierFilter decisions.
// Deliberately written from scratch: plain (f, h) doubles, full re-scan of
// the archive on every insert, string decision kinds. Any behavioral overlap
// with the production filter is therefore evidence, not tautology.

#ifndef FEEDERMADS_TESTS_REFERENCE_FILTER_HPP
#define FEEDERMADS_TESTS_REFERENCE_FILTER_HPP

#include <cassert>
#include <string>
#include <vector>

namespace reffilter {

struct Entry {
  int id = 0;
  std::string bits;
  double f = 0.0;
  double h = 0.0;
};

struct Decision {
  std::string kind;              // added | replaced | rejected | duplicate
  std::vector<int> removed_ids;  // for replaced
  int other_id = -1;             // dominator for rejected, twin for duplicate
};

class ReferenceFilter {
 public:
  Decision insert(const std::string& bits, double f, double h) {
    Decision decision;

    for (const Entry& e : entries_) {
      if (e.f == f && e.h == h) {
        decision.kind = "duplicate";
        decision.other_id = e.id;
        return decision;
      }
    }

    bool candidate_dominated = false;
    int dominator = -1;
    std::vector<int> dominated_members;
    for (const Entry& e : entries_) {
      const bool member_leq = e.f <= f && e.h <= h;
      const bool member_strict = e.f < f || e.h < h;
      const bool cand_leq = f <= e.f && h <= e.h;
      const bool cand_strict = f < e.f || h < e.h;
      if (member_leq && member_strict && !candidate_dominated) {
        candidate_dominated = true;
        dominator = e.id;
      }
      if (cand_leq && cand_strict) dominated_members.push_back(e.id);
    }
    // A candidate cannot lose to one member and beat another: that would
    // put a dominance chain inside a mutually non-dominated archive.
    assert(!(candidate_dominated && !dominated_members.empty()));

    if (candidate_dominated) {
      decision.kind = "rejected";
      decision.other_id = dominator;
      return decision;
    }
    if (!dominated_members.empty()) {
      decision.kind = "replaced";
      decision.removed_ids = dominated_members;
      std::vector<Entry> kept;
      for (const Entry& e : entries_) {
        bool removed = false;
        for (int id : dominated_members) removed = removed || id == e.id;
        if (!removed) kept.push_back(e);
      }
      entries_ = kept;
    } else {
      decision.kind = "added";
    }
    entries_.push_back(Entry{next_id_++, bits, f, h});
    return decision;
  }

  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }

  [[nodiscard]] bool mutually_nondominated() const {
    for (const Entry& a : entries_) {
      for (const Entry& b : entries_) {
        if (a.id == b.id) continue;
        if (a.f <= b.f && a.h <= b.h) return false;
      }
    }
    return true;
  }

 private:
  std::vector<Entry> entries_;
  int next_id_ = 0;
};

}  // namespace reffilter

#endif  // FEEDERMADS_TESTS_REFERENCE_FILTER_HPP
