#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "orbrec/error.hpp"
#include "orbrec/grouprec.hpp"
#include "support.hpp"

using namespace orbrec;
using grouprec::CosetTable;
using grouprec::GroupPresentation;
using grouprec::LocalSingularityDescriptor;
using grouprec::Word;
using quotients::IsotropyGroupKind;

namespace {

// Trace a word from a coset through a closed table.
std::size_t trace(const CosetTable& t, std::size_t from, const Word& w) {
  std::size_t c = from;
  for (int sym : w) {
    std::size_t col = sym > 0 ? 2 * std::size_t(sym - 1) : 2 * std::size_t(-sym - 1) + 1;
    c = t.action[c][col];
  }
  return c;
}

void check_enumeration(const GroupPresentation& p, std::size_t expected_order) {
  CosetTable t = grouprec::todd_coxeter(p);
  REQUIRE(t.status == CosetTable::Status::Complete);
  CAPTURE(grouprec::to_text(p));
  CHECK(t.order == expected_order);
  auto oracle = testsupport::table_oracle(p, t);
  CAPTURE(oracle.failure);
  CHECK(oracle.ok);
  CHECK(oracle.permutation_group_order == expected_order);
  REQUIRE(t.coset_words.size() == t.order);
  CHECK(t.coset_words[0].empty());
  for (std::size_t c = 0; c < t.order; ++c) CHECK(trace(t, 0, t.coset_words[c]) == c);
}

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(grouprec::free_reduce({1, -1}) == Word{});
  CHECK(grouprec::free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(grouprec::free_reduce({1, 2, -2, 1, -1, -1}) == Word{});
  CHECK(grouprec::free_reduce({2, 1, 1, -2}) == Word{2, 1, 1, -2});
}

TEST_CASE("presentations validate their generators and relators") {
  CHECK_THROWS_AS(GroupPresentation({"a", "a"}, {}), domain_error);
  CHECK_THROWS_AS(GroupPresentation({""}, {}), domain_error);
  CHECK_THROWS_AS(GroupPresentation({"a"}, {Word{2}}), domain_error);
  CHECK_THROWS_AS(GroupPresentation({"a"}, {Word{0}}), domain_error);
  CHECK_THROWS_AS(GroupPresentation({"a"}, {Word{-2}}), domain_error);
  GroupPresentation p({"a", "b"}, {Word{1, 2, -1, -2}});
  CHECK(p.generator_index("b") == 1);
  CHECK_THROWS_AS(p.generator_index("c"), domain_error);
}

TEST_CASE("presentation text is canonical and round-trips") {
  GroupPresentation dihedral({"b1", "b2"}, {{2, 2}, {1, 2, 1, 2, 1, 2}, {1, 1}});
  CHECK(grouprec::to_text(dihedral) == "gens: b1 b2\nrels: b1^2 b2^2 (b1 b2)^3\n");

  GroupPresentation tied({"b1", "b2"}, {{2, 2}, {1, 2}, {1, 1}});
  CHECK(grouprec::to_text(tied) == "gens: b1 b2\nrels: b1^2 (b1 b2) b2^2\n");

  GroupPresentation commutator({"a", "b"}, {{1, 2, -1, -2}});
  CHECK(grouprec::to_text(commutator) == "gens: a b\nrels: (a b a^-1 b^-1)\n");

  GroupPresentation empty_rels({"x"}, {});
  CHECK(grouprec::to_text(empty_rels) == "gens: x\nrels:\n");

  GroupPresentation no_gens({}, {});
  CHECK(grouprec::to_text(no_gens) == "gens:\nrels:\n");

  for (const auto& p : {dihedral, tied, commutator, empty_rels, no_gens}) {
    GroupPresentation back = grouprec::parse_presentation(grouprec::to_text(p));
    CHECK(back.generators == p.generators);
    std::vector<Word> lhs = back.relators;
    std::vector<Word> rhs = p.relators;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("parser accepts powers, parentheses, and negative exponents") {
  auto p = grouprec::parse_presentation("gens: a b\nrels: a^3 (a b)^-2 b\n");
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == Word{1, 1, 1});
  CHECK(p.relators[1] == Word{-2, -1, -2, -1});
  CHECK(p.relators[2] == Word{2});

  auto q = grouprec::parse_presentation("gens: a\nrels: a^-3\n");
  CHECK(q.relators[0] == Word{-1, -1, -1});

  auto nested = grouprec::parse_presentation("gens: a b\nrels: (a (a b)^2)^2\n");
  CHECK(nested.relators[0] == Word{1, 1, 2, 1, 2, 1, 1, 2, 1, 2});
}

TEST_CASE("parser rejects malformed presentations") {
  CHECK_THROWS_AS(grouprec::parse_presentation("gens: a\nrels: c\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("gens: a\nrels: (a\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("gens: a\nrels: a)\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("rels: a\ngens: a\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("gens: a\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("rels: a\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("stuff: a\nrels: a\n"), domain_error);
  CHECK_THROWS_AS(grouprec::parse_presentation("gens: a\nrels: a^\n"), domain_error);
}

TEST_CASE("local presentations match the four neighborhood shapes") {
  CHECK(grouprec::to_text(grouprec::hnd_local_presentation(
            LocalSingularityDescriptor::regular())) == "gens:\nrels:\n");
  CHECK(grouprec::to_text(grouprec::hnd_local_presentation(
            LocalSingularityDescriptor::mirror_edge())) == "gens: b\nrels: b^2\n");
  CHECK(grouprec::to_text(grouprec::hnd_local_presentation(
            LocalSingularityDescriptor::cone_point(5))) == "gens: a\nrels: a^5\n");
  CHECK(grouprec::to_text(grouprec::hnd_local_presentation(
            LocalSingularityDescriptor::corner_point(6))) ==
        "gens: b1 b2\nrels: b1^2 b2^2 (b1 b2)^3\n");
  CHECK_THROWS_AS(LocalSingularityDescriptor::cone_point(0), domain_error);
  CHECK_THROWS_AS(LocalSingularityDescriptor::corner_point(5), domain_error);
  CHECK_THROWS_AS(LocalSingularityDescriptor::corner_point(0), domain_error);
}

TEST_CASE("the general presentation step adjoins mirrors, cones, and corners") {
  GroupPresentation base({"x"}, {});
  auto p = grouprec::hnd_general(base, {"m1", "m2"}, {{Word{1}, 3}},
                                 {{"m1", "m2", 4}});
  CHECK(p.generators == std::vector<std::string>{"x", "m1", "m2"});
  // Expected relators: m1^2, m2^2, x^3, (m1 m2)^2.
  std::vector<Word> want = {{2, 2}, {3, 3}, {1, 1, 1}, {2, 3, 2, 3}};
  std::vector<Word> got = p.relators;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);

  CHECK_THROWS_AS(grouprec::hnd_general(base, {"m", "m"}, {}, {}), domain_error);
  CHECK_THROWS_AS(grouprec::hnd_general(base, {"m"}, {}, {{"m", "q", 4}}), domain_error);
  CHECK_THROWS_AS(grouprec::hnd_general(base, {"m1", "m2"}, {}, {{"m1", "m2", 5}}),
                  domain_error);
  CHECK_THROWS_AS(grouprec::hnd_general(base, {"m"}, {{Word{2}, 3}}, {}), domain_error);
  CHECK_THROWS_AS(grouprec::hnd_general(base, {"m"}, {{Word{1}, 0}}, {}), domain_error);
}

TEST_CASE("coset enumeration recovers the orders of the local groups") {
  check_enumeration(grouprec::hnd_local_presentation(LocalSingularityDescriptor::regular()), 1);
  check_enumeration(grouprec::hnd_local_presentation(LocalSingularityDescriptor::mirror_edge()),
                    2);
  for (unsigned k = 1; k <= 8; ++k) {
    check_enumeration(
        grouprec::hnd_local_presentation(LocalSingularityDescriptor::cone_point(k)), k);
    check_enumeration(
        grouprec::hnd_local_presentation(LocalSingularityDescriptor::corner_point(2 * k)),
        2 * k);
  }
}

TEST_CASE("coset enumeration handles groups beyond the local families") {
  check_enumeration(GroupPresentation({"a", "b"}, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}}), 6);
  check_enumeration(GroupPresentation({"a", "b"}, {{1, 1, -2}, {2, 2, 2}}), 6);
  check_enumeration(GroupPresentation({"a", "b"}, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}),
                    8);
  check_enumeration(GroupPresentation({"a", "b"}, {{1, 1, 1}, {2, 2, 2}, {1, 2, -1, -2}}), 9);
  check_enumeration(GroupPresentation({"a", "b"}, {{1, 1}, {2, 2, 2, 2}, {1, 2, -1, -2}}), 8);
  check_enumeration(GroupPresentation({"a"}, {{1, 1, 1, 1}}), 4);
}

TEST_CASE("classification distinguishes the planar reflection groups") {
  auto classify = [](const GroupPresentation& p) { return grouprec::classify_finite_group(p); };

  CHECK(classify(grouprec::hnd_local_presentation(LocalSingularityDescriptor::regular())) ==
        IsotropyGroupKind::trivial());
  CHECK(classify(grouprec::hnd_local_presentation(LocalSingularityDescriptor::cone_point(1))) ==
        IsotropyGroupKind::trivial());
  // Order-two groups split on presentation shape: a single involution reads
  // as a rotation, two mirror generators read as the smallest dihedral group.
  CHECK(classify(grouprec::hnd_local_presentation(LocalSingularityDescriptor::mirror_edge())) ==
        IsotropyGroupKind::cyclic(2));
  for (unsigned k = 2; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(classify(grouprec::hnd_local_presentation(
              LocalSingularityDescriptor::cone_point(k))) == IsotropyGroupKind::cyclic(k));
    CHECK(classify(grouprec::hnd_local_presentation(
              LocalSingularityDescriptor::corner_point(2 * k))) ==
          IsotropyGroupKind::dihedral(k));
  }
  CHECK(classify(grouprec::hnd_local_presentation(
            LocalSingularityDescriptor::corner_point(2))) == IsotropyGroupKind::dihedral(1));

  CHECK(classify(GroupPresentation({"a", "b"}, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}})) ==
        IsotropyGroupKind::dihedral(3));
  CHECK(classify(GroupPresentation({"a", "b"}, {{1, 1, -2}, {2, 2, 2}})) ==
        IsotropyGroupKind::cyclic(6));
  CHECK(classify(GroupPresentation({"a", "b"}, {{1, 1}, {2, 2}, {1, 2, 1, 2}})) ==
        IsotropyGroupKind::dihedral(2));
  CHECK(classify(GroupPresentation({"a"}, {{1, 1, 1, 1}})) == IsotropyGroupKind::cyclic(4));

  // Quaternion, Z3 x Z3, and Z2 x Z4 are neither cyclic nor dihedral.
  CHECK(classify(GroupPresentation(
            {"a", "b"}, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}})) == std::nullopt);
  CHECK(classify(GroupPresentation(
            {"a", "b"}, {{1, 1, 1}, {2, 2, 2}, {1, 2, -1, -2}})) == std::nullopt);
  CHECK(classify(GroupPresentation(
            {"a", "b"}, {{1, 1}, {2, 2, 2, 2}, {1, 2, -1, -2}})) == std::nullopt);
}

TEST_CASE("classification is stable under generator relabeling") {
  GroupPresentation p({"u", "v"}, {{2, 2}, {1, 1}, {2, 1, 2, 1, 2, 1}});
  CHECK(grouprec::classify_finite_group(p) == IsotropyGroupKind::dihedral(3));
  GroupPresentation q({"v", "u"}, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CHECK(grouprec::classify_finite_group(q) == IsotropyGroupKind::dihedral(3));
  // Conjugated relators present the same group.
  GroupPresentation r({"a", "b"},
                      {{1, 1, 1, 1}, {2, 1, 2, -1, -1, -1}, {-1, 2, 2, 1}});
  auto c = grouprec::classify_finite_group(r);
  REQUIRE(c.has_value());
  CHECK(c->order() == 8);
  CHECK(*c == IsotropyGroupKind::dihedral(4));
}

TEST_CASE("enumeration reports exhaustion instead of diverging") {
  GroupPresentation free2({"a", "b"}, {});
  CosetTable t = grouprec::todd_coxeter(free2, 200);
  CHECK(t.status == CosetTable::Status::Exceeded);
  CHECK(grouprec::classify_finite_group(free2, 200) == std::nullopt);

  GroupPresentation zed({"a"}, {});
  CHECK(grouprec::todd_coxeter(zed, 50).status == CosetTable::Status::Exceeded);

  CHECK_THROWS_AS(grouprec::todd_coxeter(free2, 0), domain_error);
  CHECK_THROWS_AS(grouprec::multiplication_table(t), domain_error);
}

TEST_CASE("a large cyclic enumeration stays within the limit") {
  Word rel(60, 1);
  GroupPresentation p({"a"}, {rel});
  CosetTable t = grouprec::todd_coxeter(p);
  REQUIRE(t.status == CosetTable::Status::Complete);
  CHECK(t.order == 60);
  CHECK(grouprec::classify_finite_group(p) == IsotropyGroupKind::cyclic(60));
}
