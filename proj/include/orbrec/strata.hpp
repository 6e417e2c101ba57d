#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orbrec::strata {

struct Stratum {
  std::string id;
  unsigned codim = 0;
  std::string label;
  std::optional<unsigned> order;  // local isotropy order, where known
  bool open_dense = false;
};

// A frontier pair (lower, upper) records that the lower stratum lies in the
// closure of the upper one; pairs implied by transitivity may be present or
// omitted.
struct StratifiedModel {
  std::vector<Stratum> strata;
  std::set<std::pair<std::string, std::string>> frontier;

  const Stratum* find(const std::string& id) const;
};

// Combinatorial well-formedness: unique known ids, frontier is a strict
// partial order, codimension strictly decreases from lower to upper, orders
// sit only on codimension-1 or codimension-2 strata, at most one stratum is
// flagged open and dense (and it must have codimension 0).  Returns a list
// of human-readable violations; empty means valid.
std::vector<std::string> validate(const StratifiedModel& model);

struct PointClassDescriptor {
  unsigned codim = 0;
  // True when some codimension-1 stratum's closure contains this stratum;
  // only meaningful for codimension 2.
  bool mirror_adjacent = false;
  std::optional<unsigned> order;
};

// Local class of the given stratum.  Throws on an unknown id.
PointClassDescriptor point_class(const StratifiedModel& model, const std::string& id);

// Reflexive-free transitive closure of the frontier relation.
std::set<std::pair<std::string, std::string>> frontier_closure(const StratifiedModel& model);

}  // namespace orbrec::strata
