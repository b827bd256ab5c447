#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sgt/corpus.hpp"
#include "sgt/lattice.hpp"

using namespace sgt;

namespace {

Group make(int degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> ps;
  for (const char* s : gens) ps.push_back(parse_perm(s, degree));
  return Group(degree, std::move(ps));
}

Group s4() { return make(4, {"(1 2)", "(1 2 3 4)"}); }
Group a4() { return make(4, {"(1 2 3)", "(2 3 4)"}); }
Group a5() { return make(5, {"(1 2 3)", "(3 4 5)"}); }
Group v4_in_s4() { return make(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }

std::vector<std::uint64_t> factor_orders(const std::vector<ChiefFactor>& s) {
  std::vector<std::uint64_t> out;
  for (const auto& f : s) out.push_back(f.factor_order);
  return out;
}

}  // namespace

TEST_CASE("subgroup counts against the pair-closure oracle") {
  Group c6 = make(6, {"(1 2 3 4 5 6)"});
  CHECK(SubgroupLattice::enumerate(c6).size() == 4);
  CHECK(oracle::subgroups_by_pair_closure(c6).size() == 4);

  SubgroupLattice ls4 = SubgroupLattice::enumerate(s4());
  CHECK(ls4.size() == 30);
  CHECK(oracle::subgroups_by_pair_closure(s4()).size() == 30);

  SubgroupLattice la4 = SubgroupLattice::enumerate(a4());
  CHECK(la4.size() == 10);
  CHECK(oracle::subgroups_by_pair_closure(a4()).size() == 10);
}

TEST_CASE("lattice element sets agree with the oracle exactly") {
  SubgroupLattice lat = SubgroupLattice::enumerate(a4());
  auto oracle_subs = oracle::subgroups_by_pair_closure(a4());
  REQUIRE(lat.size() == oracle_subs.size());
  std::set<std::vector<Perm>> mine;
  for (std::size_t i = 0; i < lat.size(); ++i) mine.insert(lat.subgroup(i).elements());
  std::set<std::vector<Perm>> theirs(oracle_subs.begin(), oracle_subs.end());
  CHECK(mine == theirs);
}

TEST_CASE("lattice ordering, normal flags, conjugacy classes") {
  SubgroupLattice lat = SubgroupLattice::enumerate(s4());
  for (std::size_t i = 1; i < lat.size(); ++i)
    CHECK(lat.subgroup(i - 1).order() <= lat.subgroup(i).order());
  CHECK(lat.subgroup(0).is_trivial());
  CHECK(lat.subgroup(lat.size() - 1).same_group_as(s4()));

  std::size_t total = 0;
  for (const auto& cls : lat.conjugacy_classes()) total += cls.size();
  CHECK(total == lat.size());

  // normal iff closed under conjugation by every parent generator
  for (std::size_t i = 0; i < lat.size(); ++i) {
    bool closed = true;
    for (const Perm& x : s4().generators())
      if (!conjugate_group(lat.subgroup(i), x).same_group_as(lat.subgroup(i))) closed = false;
    CHECK(lat.is_normal(i) == closed);
  }
}

TEST_CASE("lattice threshold") {
  CHECK_THROWS_AS(SubgroupLattice::enumerate(a5(), 50), threshold_exceeded);
}

TEST_CASE("normal_subgroups") {
  auto orders = [](const std::vector<Group>& gs) {
    std::vector<std::uint64_t> out;
    for (const auto& g : gs) out.push_back(g.order());
    return out;
  };
  CHECK(orders(normal_subgroups(a5())) == std::vector<std::uint64_t>{1, 60});
  CHECK(orders(normal_subgroups(s4())) == std::vector<std::uint64_t>{1, 4, 12, 24});
  Group v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(normal_subgroups(v4).size() == 5);  // abelian: every subgroup is normal

  // agreement with the lattice normality flags
  SubgroupLattice lat = SubgroupLattice::enumerate(s4());
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_normal(i)) ++flagged;
  CHECK(flagged == normal_subgroups(s4()).size());
}

TEST_CASE("minimal_normal_subgroups") {
  auto mins = minimal_normal_subgroups(a5());
  REQUIRE(mins.size() == 1);
  CHECK(mins.front().same_group_as(a5()));

  auto mins_s4 = minimal_normal_subgroups(s4());
  REQUIRE(mins_s4.size() == 1);
  CHECK(mins_s4.front().same_group_as(v4_in_s4()));

  Group v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(minimal_normal_subgroups(v4).size() == 3);

  CHECK_THROWS_AS(minimal_normal_subgroups(Group::trivial(3)), precondition_error);
}

TEST_CASE("chief series") {
  auto s = chief_series(s4());
  CHECK(factor_orders(s) == std::vector<std::uint64_t>{4, 3, 2});
  CHECK(s[0].above.same_group_as(v4_in_s4()));
  CHECK(s[1].above.same_group_as(a4()));

  CHECK(factor_orders(chief_series(a5())) == std::vector<std::uint64_t>{60});

  // C6: the smallest-first tie-break picks C2 below C3
  Group c6 = make(6, {"(1 2 3 4 5 6)"});
  CHECK(factor_orders(chief_series(c6)) == std::vector<std::uint64_t>{2, 3});
  CHECK(factor_orders(chief_series(c6, TieBreak::largest_first)) ==
        std::vector<std::uint64_t>{3, 2});

  CHECK(chief_series(Group::trivial(2)).empty());
}

TEST_CASE("chief series betweenness and Jordan-Holder order multiset") {
  for (const char* name : {"S4", "A4", "C12", "D12", "SL23", "Q8"}) {
    CAPTURE(name);
    Group g = build_checked(*find_entry(builtin_corpus(), name));
    const auto& normals = normal_subgroups(g);
    auto series = chief_series(g);

    for (const auto& f : series) {
      for (const Group& k : normals) {
        bool strictly_between = k.order() > f.below.order() && k.order() < f.above.order() &&
                                k.contains_group(f.below) && f.above.contains_group(k);
        CHECK_FALSE(strictly_between);
      }
    }

    auto a = factor_orders(series);
    auto b = factor_orders(chief_series(g, TieBreak::largest_first));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("centralizer_of_chief_factor") {
  auto s = chief_series(s4());
  // f = (1 < V4) in S4: the centralizer is V4 itself
  CHECK(s[0].centralizer.same_group_as(v4_in_s4()));
  CHECK(centralizer_of_chief_factor(s4(), s[0].below, s[0].above).same_group_as(v4_in_s4()));
  CHECK(s[0].centralizer_index == 6);

  auto sa4 = chief_series(a4());
  CHECK(sa4[0].centralizer.same_group_as(v4_in_s4()));
  CHECK(sa4[0].centralizer_index == 3);

  Group c6 = make(6, {"(1 2 3 4 5 6)"});
  CHECK(centralizer_of_chief_factor(c6, Group::trivial(6), c6).same_group_as(c6));

  // contains f.below and is normal in the parent
  Group sl23 = make(8, {"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"});
  for (const auto& f : chief_series(sl23)) {
    CHECK(f.centralizer.contains_group(f.below));
    for (const Perm& x : sl23.generators())
      CHECK(conjugate_group(f.centralizer, x).same_group_as(f.centralizer));
  }
}

TEST_CASE("quotient") {
  CHECK(quotient(s4(), s4()).is_trivial());

  Group q = quotient(s4(), v4_in_s4());
  CHECK(q.order() == 6);
  CHECK(element_order_profile(q) == std::vector<std::uint64_t>{1, 2, 2, 2, 3, 3});

  Group c6 = make(6, {"(1 2 3 4 5 6)"});
  Group c2 = make(6, {"(1 4)(2 5)(3 6)"});
  Group q3 = quotient(c6, c2);
  CHECK(q3.order() == 3);
  CHECK(element_order_profile(q3) == std::vector<std::uint64_t>{1, 3, 3});

  Group c2bad = make(4, {"(1 2)"});
  CHECK_THROWS_AS(quotient(s4(), c2bad), precondition_error);
}

TEST_CASE("intersection_order memo matches direct intersection") {
  SubgroupLattice lat = SubgroupLattice::enumerate(s4());
  for (std::size_t i = 0; i < lat.size(); i += 5)
    for (std::size_t j = 0; j < lat.size(); j += 7)
      CHECK(lat.intersection_order(i, j) ==
            intersect(lat.subgroup(i), lat.subgroup(j)).order());
}
