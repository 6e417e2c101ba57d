#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbrec/quotients.hpp"

namespace orbrec::grouprec {

// A word over the generators: symbol +(i+1) is generator i, -(i+1) its
// inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> gens, std::vector<Word> rels);

  std::size_t generator_index(const std::string& name) const;  // throws if absent
};

// Text form:
//   gens: a b
//   rels: a^2 b^2 (a b)^3
// Relators are space-separated at top level; a multi-letter relator is
// parenthesized.  Serialization is canonical: relators sorted by length
// then lexicographically, repeats collapsed into powers.
std::string to_text(const GroupPresentation& p);
GroupPresentation parse_presentation(const std::string& text);

// What a neighborhood of a point in a two-dimensional orbit space looks
// like: a manifold point, a mirror boundary point, a rotation center of the
// given order, or a corner where two mirror curves meet (order 2k).
struct LocalSingularityDescriptor {
  enum class Kind { Regular, MirrorEdge, ConePoint, CornerPoint };
  Kind kind = Kind::Regular;
  unsigned order = 1;

  static LocalSingularityDescriptor regular() { return {Kind::Regular, 1}; }
  static LocalSingularityDescriptor mirror_edge() { return {Kind::MirrorEdge, 2}; }
  static LocalSingularityDescriptor cone_point(unsigned order);
  static LocalSingularityDescriptor corner_point(unsigned order);  // order must be even
};

// Presentation of the local orbifold fundamental group: trivial for a
// manifold point, <b | b^2> at a mirror edge, <a | a^k> at a cone point of
// order k, <b1, b2 | b1^2, b2^2, (b1 b2)^k> at a corner of order 2k.
GroupPresentation hnd_local_presentation(const LocalSingularityDescriptor& d);

// General presentation step: starting from the fundamental group of the
// regular part, adjoin one involution per mirror path class, one power
// relation per cone stratum (the loop word is over the base generators),
// and one braid-free corner relation (b_i b_j)^k per corner of order 2k.
GroupPresentation hnd_general(const GroupPresentation& base,
                              const std::vector<std::string>& mirror_path_classes,
                              const std::vector<std::pair<Word, unsigned>>& cone_loops,
                              const std::vector<std::tuple<std::string, std::string, unsigned>>& corners);

inline constexpr std::size_t kDefaultCosetLimit = 100000;

struct CosetTable {
  enum class Status { Complete, Exceeded };
  Status status = Status::Exceeded;
  std::size_t order = 0;  // number of cosets when complete
  // action[c][2g] is coset c moved by generator g, action[c][2g+1] by its
  // inverse; complete and defined everywhere when status == Complete.
  std::vector<std::vector<std::size_t>> action;
  // A word reaching each coset from coset 0 (identity), via breadth-first
  // search over the closed table.
  std::vector<Word> coset_words;
};

// Coset enumeration over the trivial subgroup with the deterministic
// fill-in-order strategy.  Returns Exceeded once the allocation count
// passes the limit (the group may be infinite or merely large).
CosetTable todd_coxeter(const GroupPresentation& p, std::size_t limit = kDefaultCosetLimit);

// Full multiplication table of the enumerated group: entry [i][j] is the
// coset reached by tracing coset j's word from coset i.  Requires a
// complete table.
std::vector<std::vector<std::size_t>> multiplication_table(const CosetTable& t);

// Decides whether the presented group is cyclic or dihedral; empty when the
// enumeration exceeded the limit or the group is neither.  Order-two groups
// are reported as dihedral(1) exactly when at least two distinct generators
// map onto the involution (two mirror generators), cyclic(2) otherwise.
std::optional<quotients::IsotropyGroupKind> classify_finite_group(
    const GroupPresentation& p, std::size_t limit = kDefaultCosetLimit);

}  // namespace orbrec::grouprec
