#include "doctest.h"

#include "qpluck/qcalc.hpp"

using namespace qpluck;

namespace {

Poly P(std::initializer_list<long> cs) {
  std::vector<Coeff> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}

}  // namespace

TEST_SUITE_BEGIN("qcalc");

TEST_CASE("q_int basics") {
  CHECK(q_int(1) == P({1}));
  CHECK(q_int(3) == P({1, 1, 1}));
  CHECK(q_int(5) == P({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(q_int(0), InvalidInput);
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == Poly::one());
  CHECK(q_factorial(2) == P({1, 1}));
  // (1+q)(1+q+q^2) by hand convolution
  CHECK(q_factorial(3) == P({1, 2, 2, 1}));
}

TEST_CASE("poly multiplication") {
  CHECK(P({1, 1}) * P({1, 1, 1}) == P({1, 2, 2, 1}));
  const Poly p = P({3, 0, 7, 1});
  CHECK(p * Poly::one() == p);
  CHECK(q_int(4) * q_int(5) == P({1, 2, 3, 4, 4, 3, 2, 1}));
  CHECK((p * Poly::zero()).is_zero());
}

TEST_CASE("poly addition and shift") {
  CHECK(P({1, 2}) + P({0, 1, 1}) == P({1, 3, 1}));
  CHECK(P({1, 1}).shifted(2) == P({0, 0, 1, 1}));
  CHECK(Poly::zero().shifted(3).is_zero());
}

TEST_CASE("poly_divexact") {
  CHECK(poly_divexact(P({1, 2, 2, 1}), P({1, 1})) == P({1, 1, 1}));
  const Poly p = P({5, 1, 4});
  CHECK(poly_divexact(p, Poly::one()) == p);
  CHECK_THROWS_AS(poly_divexact(P({1, 1, 1}), P({1, 1})), NotDivisible);
  // quotient would need a negative coefficient: (1 + q^2) / (1 + q)
  CHECK_THROWS_AS(poly_divexact(P({1, 0, 1}), P({1, 1})), NotDivisible);
  CHECK_THROWS_AS(poly_divexact(P({1, 1, 1}), P({2, 2})), NotDivisible);
  CHECK_THROWS_AS(poly_divexact(p, Poly::zero()), InvalidInput);
}

TEST_CASE("divexact inverts multiplication") {
  const std::vector<Poly> samples = {q_int(2),     q_int(7),           q_factorial(4),
                                     gauss(2, 3),  P({1, 0, 0, 2}),    P({4}),
                                     gauss(3, 3),  P({1, 5, 5, 1})};
  for (const auto& a : samples)
    for (const auto& b : samples) CHECK(poly_divexact(a * b, b) == a);
}

TEST_CASE("gauss explicit values") {
  for (int n = 0; n <= 6; ++n) CHECK(gauss(1, n) == q_int(n + 1));
  CHECK(gauss(4, 4) == P({1, 1, 2, 3, 5, 5, 7, 7, 8, 7, 7, 5, 5, 3, 2, 1, 1}));
  CHECK(gauss(3, 3) == P({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));

  const Poly g66 = gauss(6, 6);
  const long head[] = {1, 1, 2, 3, 5, 7, 11};
  for (int i = 0; i <= 6; ++i) CHECK(g66[i] == head[i]);
  const long middle[] = {51, 55, 55, 58, 55, 55, 51};
  for (int i = 0; i <= 6; ++i) CHECK(g66[15 + i] == middle[i]);
}

TEST_CASE("gauss symmetry, degree, palindrome") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const Poly g = gauss(m, n);
      CHECK(g == gauss(n, m));
      CHECK(g.degree() == m * n);
      const auto& c = g.coeffs();
      for (size_t i = 0; i < c.size(); ++i) CHECK(c[i] == c[c.size() - 1 - i]);
    }
  }
}

TEST_CASE("gauss at q=1 is the ordinary binomial") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n)
      CHECK(gauss(m, n).eval_one() ==
            binomial_exact(static_cast<unsigned long>(m + n), static_cast<unsigned long>(m)));
}

TEST_CASE("q_multinomial") {
  CHECK(q_multinomial({5}) == Poly::one());
  CHECK(q_multinomial({1, 1, 1}) == P({1, 2, 2, 1}));
  CHECK(q_multinomial({2, 3}) == gauss(2, 3));
  CHECK(q_multinomial({0, 4, 0}) == Poly::one());
  CHECK_THROWS_AS(q_multinomial({}), InvalidInput);
}

TEST_CASE("q_multinomial is invariant under permutation of parts") {
  const std::vector<std::vector<int>> lists = {
      {1, 2, 3}, {3, 2, 1}, {2, 1, 3}, {2, 2, 4}, {4, 2, 2}, {1, 1, 5}, {5, 1, 1}};
  CHECK(q_multinomial(lists[0]) == q_multinomial(lists[1]));
  CHECK(q_multinomial(lists[0]) == q_multinomial(lists[2]));
  CHECK(q_multinomial(lists[3]) == q_multinomial(lists[4]));
  CHECK(q_multinomial(lists[5]) == q_multinomial(lists[6]));
  // and equals the factorial quotient
  CHECK(q_multinomial({1, 2, 3}) ==
        poly_divexact(q_factorial(6), q_factorial(2) * q_factorial(3)));
}

TEST_CASE("lattice_gf small cases") {
  CHECK(lattice_gf(0, 5) == Poly::one());
  CHECK(lattice_gf(2, 2) == P({1, 1, 2, 1, 1}));
  CHECK_THROWS_AS(lattice_gf(20, 20), BudgetExceeded);
}

TEST_CASE("lattice enumeration agrees with gauss for all m+n <= 12") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; m + n <= 12; ++n) CHECK(lattice_gf(m, n) == gauss(m, n));
}

TEST_CASE("csv round trip") {
  const Poly p = gauss(5, 5);
  CHECK(Poly::from_csv(p.to_csv()) == p);
  CHECK(Poly::from_csv("1, 2,2 ,1") == P({1, 2, 2, 1}));
  CHECK_THROWS_AS(Poly::from_csv("1,-2,1"), InvalidInput);
  CHECK_THROWS_AS(Poly::from_csv("1,x"), InvalidInput);
  CHECK_THROWS_AS(Poly::from_csv(""), InvalidInput);
}

TEST_CASE("zero polynomial representation") {
  CHECK(Poly::zero().coeffs() == std::vector<Coeff>{Coeff(0)});
  CHECK(Poly(std::vector<Coeff>{Coeff(0), Coeff(0)}) == Poly::zero());
  CHECK(Poly::zero().degree() == 0);
}

TEST_SUITE_END();
