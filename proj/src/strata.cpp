#include "orbrec/strata.hpp"

#include <map>

#include "orbrec/error.hpp"

namespace orbrec::strata {

const Stratum* StratifiedModel::find(const std::string& id) const {
  for (const auto& s : strata)
    if (s.id == id) return &s;
  return nullptr;
}

std::set<std::pair<std::string, std::string>> frontier_closure(const StratifiedModel& model) {
  std::set<std::pair<std::string, std::string>> closure = model.frontier;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : closure) {
      for (const auto& [c, d] : closure) {
        if (b != c) continue;
        if (closure.emplace(a, d).second) {
          changed = true;
          // The set was modified; restart the sweep with fresh iterators.
          goto next_sweep;
        }
      }
    }
  next_sweep:;
  }
  return closure;
}

std::vector<std::string> validate(const StratifiedModel& model) {
  std::vector<std::string> violations;
  std::map<std::string, const Stratum*> by_id;

  for (const auto& s : model.strata) {
    if (!by_id.emplace(s.id, &s).second)
      violations.push_back("duplicate stratum id '" + s.id + "'");
  }

  unsigned open_dense_count = 0;
  for (const auto& s : model.strata) {
    if (s.order && *s.order == 0)
      violations.push_back("stratum '" + s.id + "' has order 0");
    if (s.order && s.codim != 1 && s.codim != 2)
      violations.push_back("order attached to codimension-" + std::to_string(s.codim) +
                           " stratum '" + s.id + "'");
    if (s.open_dense) {
      ++open_dense_count;
      if (s.codim != 0)
        violations.push_back("open-dense flag on codimension-" + std::to_string(s.codim) +
                             " stratum '" + s.id + "'");
    }
  }
  if (open_dense_count > 1)
    violations.push_back("more than one stratum flagged open and dense");

  bool ids_ok = true;
  for (const auto& [lo, hi] : model.frontier) {
    if (!by_id.count(lo)) {
      violations.push_back("frontier pair references unknown stratum '" + lo + "'");
      ids_ok = false;
    }
    if (!by_id.count(hi)) {
      violations.push_back("frontier pair references unknown stratum '" + hi + "'");
      ids_ok = false;
    }
    if (lo == hi) violations.push_back("frontier pair ('" + lo + "', '" + hi + "') is reflexive");
  }
  if (!ids_ok) return violations;

  for (const auto& [lo, hi] : model.frontier) {
    if (lo == hi) continue;
    if (by_id[lo]->codim <= by_id[hi]->codim)
      violations.push_back("codimension does not decrease along frontier pair ('" + lo + "', '" +
                           hi + "')");
  }

  auto closure = frontier_closure(model);
  for (const auto& [a, b] : closure) {
    if (a == b) continue;  // reported above via the generating pair
    if (closure.count({b, a})) {
      violations.push_back("frontier relation has a cycle through '" + a + "' and '" + b + "'");
      break;
    }
  }

  return violations;
}

PointClassDescriptor point_class(const StratifiedModel& model, const std::string& id) {
  const Stratum* s = model.find(id);
  if (!s) throw domain_error("unknown stratum '" + id + "'");

  PointClassDescriptor pc;
  pc.codim = s->codim;
  pc.order = s->order;
  pc.mirror_adjacent = false;
  for (const auto& [lo, hi] : frontier_closure(model)) {
    if (lo != id) continue;
    const Stratum* upper = model.find(hi);
    if (upper && upper->codim == 1) {
      pc.mirror_adjacent = true;
      break;
    }
  }
  return pc;
}

}  // namespace orbrec::strata
