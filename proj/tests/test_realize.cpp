#include "doctest.h"

#include <map>

#include "qpluck/qcalc.hpp"
#include "qpluck/realize.hpp"

using namespace qpluck;

namespace {

std::map<int, int> ms(std::initializer_list<int> xs) {
  std::map<int, int> m;
  for (int x : xs) ++m[x];
  return m;
}

Poly qints(std::initializer_list<int> xs) {
  Poly p = Poly::one();
  for (int x : xs) p = p * q_int(x);
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("realize");

TEST_CASE("from_binomials and reduce") {
  const QFraction single = QFraction::from_binomials({{1, 4}}).reduced();
  CHECK(single.num == ms({5}));
  CHECK(single.den.empty());

  const QFraction a = QFraction::from_binomials({{4, 4}, {2, 3}}).reduced();
  CHECK(a.num == ms({8, 7, 6, 5, 5}));
  CHECK(a.den == ms({3, 2, 2}));

  const QFraction b = QFraction::from_binomials({{2, 3}, {2, 2}}).reduced();
  CHECK(b.num == ms({5, 4, 4, 3}));
  CHECK(b.den == ms({2, 2}));
}

TEST_CASE("reduce cancels with multiplicity and is idempotent") {
  QFraction f;
  f.num = ms({4, 3, 2});
  f.den = ms({3, 2});
  const QFraction r = f.reduced();
  CHECK(r.num == ms({4}));
  CHECK(r.den.empty());
  CHECK(r.reduced() == r);
}

TEST_CASE("fraction serialization") {
  const QFraction a = QFraction::from_binomials({{4, 4}, {2, 3}}).reduced();
  CHECK(a.to_string() == "num: 8,7,6,5,5 / den: 3,2,2");
}

TEST_CASE("from_tree") {
  CHECK(QFraction::from_tree(parse_tree("((()))")).num.empty());
  const QFraction star = QFraction::from_tree(parse_tree("(()()())"));
  CHECK(star.num == ms({3, 2}));
  CHECK(star.den.empty());
}

TEST_CASE("from_tree expands to the plucking polynomial, trees <= 8 edges") {
  for (int e = 0; e <= 8; ++e) {
    for (const auto& t : enumerate_rooted_trees(e))
      CHECK(QFraction::from_tree(t).expand() == pluck_product(t));
  }
}

TEST_CASE("reduced numerators of reduced trees divide the edge factorial") {
  for (int e = 0; e <= 10; ++e) {
    for (const auto& t : enumerate_rooted_trees(e)) {
      if (!is_reduced(t)) continue;
      const QFraction f = QFraction::from_tree(t);
      for (const auto& [idx, mult] : f.num) {
        CHECK(mult == 1);  // square free
        CHECK(idx <= e);
      }
      if (t.children.size() >= 2)  // nontrivial wedge pins the edge count
        CHECK(f.num.rbegin()->first == e);
    }
  }
}

TEST_CASE("is_realizable") {
  CHECK_FALSE(is_realizable({{4, 4}, {2, 3}}));
  CHECK(realizability_witness({{4, 4}, {2, 3}}) == 5);
  CHECK_FALSE(is_realizable({{2, 3}, {2, 2}}));
  CHECK(realizability_witness({{2, 3}, {2, 2}}) == 4);
  CHECK(is_realizable({{3, 6}, {2, 2}}));
  CHECK(is_realizable({{3, 10}, {2, 2}}));
  CHECK_THROWS_AS(is_realizable({}), InvalidInput);
  CHECK_THROWS_AS(is_realizable({{0, 3}}), InvalidInput);
}

TEST_CASE("realize_product") {
  const PlaneTree t13 = realize_product({{1, 3}});
  CHECK(t13.edge_count() == 4);
  CHECK(pluck_product(t13) == gauss(1, 3));
  CHECK(canonical(t13) == canonical(wedge({parse_tree("(())"), parse_tree("(((())))")})));

  const PlaneTree t = realize_product({{3, 6}, {2, 2}});
  CHECK(t.edge_count() == 9);
  CHECK(pluck_product(t) == gauss(3, 6) * gauss(2, 2));

  CHECK_THROWS_AS(realize_product({{4, 4}, {2, 3}}), NotRealizable);
  try {
    realize_product({{4, 4}, {2, 3}});
  } catch (const NotRealizable& e) {
    CHECK(e.witness == 5);
  }
}

TEST_CASE("realize_qints") {
  CHECK(pluck_product(realize_qints({4})) == q_int(4));
  CHECK(pluck_product(realize_qints({2})) == q_int(2));
  const PlaneTree t = realize_qints({4, 5, 8, 10, 11});
  CHECK(t.edge_count() == 11);
  CHECK(pluck_product(t) == qints({4, 5, 8, 10, 11}));
  CHECK_THROWS_AS(realize_qints({3, 3}), NotRealizable);
  CHECK_THROWS_AS(realize_qints({5, 4}), NotRealizable);
  CHECK_THROWS_AS(realize_qints({1, 4}), InvalidInput);
  CHECK_THROWS_AS(realize_qints({}), InvalidInput);
}

TEST_CASE("the five edge example is the q-integer pair [4][5]") {
  CHECK(canonical(realize_qints({4, 5})) == canonical(parse_tree("(()()((())))")));
}

TEST_CASE("count_realizations") {
  // star shape: [4]! at four edges
  CHECK(!count_realizations(q_factorial(4), 4).empty());

  // the staggered family: the product of the first n-1 pairs has exactly n
  // reduced realizations
  CHECK(count_realizations(qints({4, 5}), 5).size() == 2);
  CHECK(count_realizations(qints({4, 5, 7, 8}), 8).size() == 3);
  CHECK(count_realizations(qints({4, 5, 7, 8, 10, 11}), 11).size() == 4);

  // consecutive q-integers from 5 up: exactly two realizations
  CHECK(count_realizations(qints({5, 6}), 6).size() == 2);
  CHECK(count_realizations(qints({6, 7}), 7).size() == 2);
  // unique two-factor cases besides the gap rule
  CHECK(count_realizations(qints({3, 4}), 4).size() == 1);

  // gaps of at least two give uniqueness
  CHECK(count_realizations(qints({4, 6}), 6).size() == 1);
  CHECK(count_realizations(qints({2, 4, 6}), 6).size() == 1);
  CHECK(count_realizations(qints({2, 5, 9}), 9).size() == 1);

  // the stated small instances are unique although gaps are below two
  CHECK(count_realizations(qints({2, 3}), 3).size() == 1);
  CHECK(count_realizations(qints({2, 4, 5}), 5).size() == 1);

  // repeats are never realizable
  CHECK(count_realizations(qints({3, 3}), 6).empty());
  CHECK(count_realizations(q_int(9) * q_int(9), 12).empty());

  // constants
  CHECK(count_realizations(Poly::one(), 4).size() == 1);
  CHECK(count_realizations(Poly::zero(), 4).empty());
  CHECK_THROWS_AS(count_realizations(Poly::one(), 25), BudgetExceeded);
}

TEST_SUITE_END();
