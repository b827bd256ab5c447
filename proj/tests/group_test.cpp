#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sgt/corpus.hpp"
#include "sgt/group.hpp"

using namespace sgt;

namespace {

Group make(int degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> ps;
  for (const char* s : gens) ps.push_back(parse_perm(s, degree));
  return Group(degree, std::move(ps));
}

}  // namespace

TEST_CASE("build_group orders for standard generating sets") {
  CHECK(make(4, {"(1 2)", "(1 2 3 4)"}).order() == 24);   // S4
  CHECK(make(5, {"(1 2 3)", "(3 4 5)"}).order() == 60);   // A5
  CHECK(make(4, {"(1 2 3)", "(2 3 4)"}).order() == 12);   // A4
  CHECK(make(4, {"(1 2 3 4)", "(1 3)"}).order() == 8);    // D8
  CHECK(Group::trivial(3).order() == 1);
  CHECK(make(8, {"(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"}).order() == 168);  // PSL(2,7)
}

TEST_CASE("build_group is deterministic and rejects bad input") {
  Group a = make(4, {"(1 2)", "(1 2 3 4)"});
  Group b = make(4, {"(1 2)", "(1 2 3 4)"});
  CHECK(a.elements() == b.elements());
  CHECK_THROWS_AS(Group(3, {Perm(3), Perm(4)}), degree_mismatch);
}

TEST_CASE("membership by sifting") {
  Group a5 = make(5, {"(1 2 3)", "(3 4 5)"});
  CHECK_FALSE(a5.contains(parse_perm("(1 2)", 5)));  // odd permutation
  CHECK(a5.contains(Perm(5)));
  CHECK(a5.contains(parse_perm("(1 2 3 4 5)", 5)));

  // agreement with the enumerated element set on random permutations
  std::mt19937 rng(20240817);
  const auto& els = a5.elements();
  auto in_els = [&](const Perm& p) {
    return std::binary_search(els.begin(), els.end(), p);
  };
  for (int t = 0; t < 100; ++t) {
    std::vector<int> img(5);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    Perm p(img);
    CHECK(a5.contains(p) == in_els(p));
  }
}

TEST_CASE("all_elements is canonical, cached, and order-consistent") {
  Group a4 = make(4, {"(1 2 3)", "(2 3 4)"});
  const auto& els = a4.elements();
  CHECK(els.size() == 12);
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK(Group::trivial(4).elements() == std::vector<Perm>{Perm(4)});
  Group c2 = make(2, {"(1 2)"});
  CHECK(c2.elements() == std::vector<Perm>{Perm(2), parse_perm("(1 2)", 2)});
}

TEST_CASE("element threshold is enforced") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  CHECK_THROWS_AS(s4.elements(10), threshold_exceeded);
}

TEST_CASE("order equals element count on the whole corpus") {
  for (const CorpusEntry& e : builtin_corpus()) {
    Group g = build_checked(e);
    CAPTURE(e.name);
    CHECK(g.order() == g.elements().size());
  }
}

TEST_CASE("normal_closure") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  Group v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(normal_closure(s4, v4).same_group_as(v4));  // already normal

  Group a5 = make(5, {"(1 2 3)", "(3 4 5)"});
  Group c3 = make(5, {"(1 2 3)"});
  CHECK(normal_closure(a5, c3).same_group_as(a5));  // simple group

  Group c2 = make(4, {"(1 2)"});
  CHECK(normal_closure(s4, c2).same_group_as(s4));

  // invariance under conjugation by every generator
  Group n = normal_closure(s4, make(4, {"(1 2 3)"}));
  for (const Perm& x : s4.generators())
    CHECK(conjugate_group(n, x).same_group_as(n));

  CHECK_THROWS_AS(normal_closure(v4, s4), precondition_error);
}

TEST_CASE("centralizer") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  Group v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Group c = centralizer(s4, v4);
  CHECK(c.same_group_as(v4));
  CHECK(c.elements() == oracle::centralizer_by_full_filter(s4, v4));

  CHECK(centralizer(s4, Group::trivial(4)).same_group_as(s4));
  Group c6 = make(6, {"(1 2 3 4 5 6)"});
  CHECK(centralizer(c6, c6).same_group_as(c6));  // abelian
}

TEST_CASE("core") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  Group d8 = make(4, {"(1 2 3 4)", "(1 3)"});
  Group v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Group k = core(s4, d8);
  CHECK(k.same_group_as(v4));
  CHECK(k.elements() == oracle::core_by_conjugate_intersection(s4, d8));

  Group a4 = make(4, {"(1 2 3)", "(2 3 4)"});
  CHECK(core(s4, a4).same_group_as(a4));  // normal subgroup is its own core

  Group a5 = make(5, {"(1 2 3)", "(3 4 5)"});
  Group a4_in_a5 = make(5, {"(1 2 3)", "(2 3 4)"});
  CHECK(core(a5, a4_in_a5).is_trivial());

  CHECK_THROWS_AS(core(d8, s4), precondition_error);
}

TEST_CASE("intersect and join") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  Group d8 = make(4, {"(1 2 3 4)", "(1 3)"});
  Group c3 = make(4, {"(1 2 3)"});
  CHECK(intersect(d8, d8).same_group_as(d8));
  CHECK(intersect(d8, c3).is_trivial());  // coprime orders
  CHECK(join(s4, make(4, {"(1 2)"}), make(4, {"(1 2 3 4)"})).same_group_as(s4));
  CHECK_THROWS_AS(join(d8, s4, c3), precondition_error);
}

TEST_CASE("Lagrange for computed subgroups") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  for (const Group& h : {make(4, {"(1 2 3 4)", "(1 3)"}), make(4, {"(1 2 3)"}),
                         make(4, {"(1 2)(3 4)", "(1 3)(2 4)"})}) {
    CHECK(s4.order() % h.order() == 0);
    CHECK(intersect(s4, h).order() == h.order());
  }
}

TEST_CASE("group_from_elements extracts a small generating set") {
  Group d8 = make(4, {"(1 2 3 4)", "(1 3)"});
  Group rebuilt = group_from_elements(4, d8.elements());
  CHECK(rebuilt.same_group_as(d8));
  CHECK(rebuilt.generators().size() <= 3);
}

TEST_CASE("direct product") {
  Group c2 = make(2, {"(1 2)"});
  Group c3 = make(3, {"(1 2 3)"});
  Group prod = direct_product(c2, c3);
  CHECK(prod.degree() == 5);
  CHECK(prod.order() == 6);
}

TEST_CASE("commutator group") {
  Group s4 = make(4, {"(1 2)", "(1 2 3 4)"});
  Group a4 = make(4, {"(1 2 3)", "(2 3 4)"});
  CHECK(commutator_group(s4, s4).same_group_as(a4));
  Group v4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(commutator_group(a4, a4).same_group_as(v4));
}
