#include "doctest.h"

#include "sgt/perm.hpp"

using namespace sgt;

TEST_CASE("compose follows (a*b)(x) = a(b(x))") {
  Perm a = parse_perm("(1 2)", 3);
  Perm b = parse_perm("(2 3)", 3);
  CHECK(compose(a, a).is_identity());  // involution squared
  // evaluated pointwise by hand: 1->2, 2->3, 3->1
  CHECK(compose(a, b) == parse_perm("(1 2 3)", 3));
  CHECK(compose(a, Perm(3)) == a);
  CHECK(compose(Perm(3), a) == a);
}

TEST_CASE("compose rejects mixed degrees") {
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), degree_mismatch);
}

TEST_CASE("inverse and order") {
  Perm c = parse_perm("(1 2 3 4 5)", 5);
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(c.order() == 5);
  CHECK(parse_perm("(1 2)(3 4 5)", 5).order() == 6);
  CHECK(Perm(4).order() == 1);
}

TEST_CASE("cycle parsing") {
  CHECK(parse_perm("()", 5).is_identity());
  CHECK(parse_perm(" ( 1 2 ) ( 4 5 ) ", 5) == parse_perm("(1 2)(4 5)", 5));
  CHECK(parse_perm("(10 11)", 12)(10) == 11);

  CHECK_THROWS_AS(parse_perm("(1 2", 3), parse_error);
  CHECK_THROWS_AS(parse_perm("(1 2)(2 3)", 3), parse_error);  // not disjoint
  CHECK_THROWS_AS(parse_perm("(1 4)", 3), parse_error);       // beyond degree
  CHECK_THROWS_AS(parse_perm("", 3), parse_error);
  CHECK_THROWS_AS(parse_perm("(0 1)", 3), parse_error);
  CHECK_THROWS_AS(parse_perm("(1)", 3), parse_error);
}

TEST_CASE("cycle printing is canonical and round-trips") {
  CHECK(to_cycle_string(Perm(4)) == "()");
  CHECK(to_cycle_string(parse_perm("(4 5)(1 2)", 5)) == "(1 2)(4 5)");
  Perm p = parse_perm("(1 3 5)(2 4)", 6);
  CHECK(parse_perm(to_cycle_string(p), 6) == p);
}

TEST_CASE("image-table validation") {
  CHECK_THROWS(Perm(std::vector<int>{1, 1, 3}));
  CHECK_THROWS(Perm(std::vector<int>{0, 1, 2}));
  CHECK_THROWS(Perm(std::vector<int>{}));
}

TEST_CASE("conjugation and commutator conventions") {
  Perm a = parse_perm("(1 2)", 4);
  Perm x = parse_perm("(1 3)", 4);
  CHECK(conjugate(a, x) == parse_perm("(2 3)", 4));
  CHECK(commutator(a, a).is_identity());
  Perm b = parse_perm("(2 3)", 4);
  // [a,b] = a^-1 b^-1 a b
  CHECK(commutator(a, b) == compose(compose(a.inverse(), b.inverse()), compose(a, b)));
}
