#include "doctest.h"

#include <vector>

#include "qpluck/qcalc.hpp"
#include "qpluck/shape.hpp"

using namespace qpluck;

namespace {

Poly P(std::initializer_list<long> cs) {
  std::vector<Coeff> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}

std::vector<long> rows_of(const Poly& p) {
  std::vector<long> out;
  for (const auto& b : row_decompose(p).rows) out.push_back(b.get_si());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("shape");

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(P({1, 2, 1})));
  CHECK_FALSE(is_symmetric(P({1, 2})));
  CHECK(is_symmetric(gauss(6, 6)));
}

TEST_CASE("is_unimodal") {
  CHECK(is_unimodal(P({1, 3, 2})));
  CHECK_FALSE(is_unimodal(P({1, 2, 1, 2, 1})));
  for (int m = 1; m <= 6; ++m)
    for (int n = m; m + n <= 12; ++n) CHECK(is_unimodal(gauss(m, n)));
  CHECK_FALSE(is_unimodal(Poly::zero()));
  CHECK_FALSE(is_unimodal(P({0, 1, 1})));
}

TEST_CASE("row decomposition") {
  CHECK(rows_of(gauss(2, 4)) == std::vector<long>{1, 0, 1, 0, 1});
  CHECK(rows_of(gauss(4, 4)) == std::vector<long>{1, 0, 1, 1, 2, 0, 2, 0, 1});
  CHECK(rows_of(q_int(9)) == std::vector<long>{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(row_decompose(P({1, 2})), NotSymmetric);
  CHECK_THROWS_AS(row_decompose(P({2, 1, 2})), NotUnimodal);
}

TEST_CASE("row decomposition reconstructs the polynomial") {
  const std::vector<Poly> samples = {gauss(2, 4),          gauss(4, 4),  gauss(3, 5),
                                     gauss(6, 6),          q_int(7),     q_int(3) * q_int(5),
                                     gauss(2, 2) * gauss(2, 3), Poly::one()};
  for (const auto& p : samples) CHECK(reconstruct(row_decompose(p)) == p);
}

TEST_CASE("classify explicit shapes") {
  const ShapeClass trap = classify(q_int(3) * q_int(5));
  CHECK(trap.N == 6);
  CHECK(trap.top_len == 2);
  CHECK(trap.trapezoidal);
  CHECK_FALSE(trap.strictly_unimodal);

  const ShapeClass g33 = classify(gauss(3, 3));
  CHECK(g33.top_len == 3);
  CHECK(g33.almost_trapezoidal);
  CHECK_FALSE(g33.trapezoidal);

  const ShapeClass g66 = classify(gauss(6, 6));
  REQUIRE(g66.top_type.has_value());
  CHECK(*g66.top_type == std::array<int, 3>{2, 1, 2});
  CHECK_FALSE(g66.almost_strictly_unimodal());

  // limiting cases
  const ShapeClass ones = classify(q_int(6));
  CHECK(ones.j == 0);
  CHECK(ones.top_len == 5);
  CHECK(ones.trapezoidal);

  const ShapeClass unit = classify(Poly::one());
  CHECK(unit.strictly_unimodal);
  CHECK(unit.top_len == 0);
}

TEST_CASE("top_type") {
  CHECK(*top_type(gauss(4, 4)) == std::array<int, 3>{2, 1, 2});
  CHECK(*top_type(gauss(3, 6)) == std::array<int, 3>{2, 3, 2});
  const Poly g34 = gauss(3, 4);
  CHECK(g34[6] == 5);
  CHECK(*top_type(g34) == std::array<int, 3>{2, 1, 2});
  CHECK_FALSE(top_type(q_int(5)).has_value());
  CHECK_FALSE(top_type(Poly::one()).has_value());
}

TEST_CASE("dominates") {
  const ShapeProfile a = row_decompose(gauss(2, 4));
  CHECK(dominates(a, a));
  const ShapeProfile b = row_decompose(q_int(9));
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  CHECK_THROWS_AS(dominates(a, row_decompose(q_int(3))), DegreeMismatch);

  // disjoint nonzero rows
  ShapeProfile x, y;
  x.N = y.N = 4;
  x.rows = {Coeff(1), Coeff(0), Coeff(1)};
  y.rows = {Coeff(0), Coeff(1), Coeff(0)};
  CHECK_FALSE(dominates(x, y));
  CHECK_FALSE(dominates(y, x));
}

TEST_CASE("predict_product_shape examples") {
  const auto a = predict_product_shape({{2, 4}, {2, 2}});
  CHECK(a.covered);
  CHECK(a.strictly_unimodal);

  const auto b = predict_product_shape({{2, 2}, {2, 3}});
  CHECK(b.covered);
  CHECK(b.top_len == 2);
  CHECK_FALSE(b.strictly_unimodal);

  const auto c = predict_product_shape({{4, 4}, {2, 3}});
  CHECK(c.covered);
  CHECK(c.top_len == 2);

  const auto d = predict_product_shape({{1, 2}, {6, 6}});
  CHECK(d.covered);
  CHECK(d.top_len == 2);

  CHECK_THROWS_AS(predict_product_shape({}), InvalidInput);
  CHECK_THROWS_AS(predict_product_shape({{2, 3}}), InvalidInput);
  CHECK_THROWS_AS(predict_product_shape({{0, 5}, {2, 3}}), InvalidInput);
}

TEST_CASE("prediction matches direct classification, factor sums <= 18") {
  std::vector<std::pair<int, int>> base;
  for (int m = 1; m <= 8; ++m)
    for (int n = m; m + n <= 16; ++n) base.emplace_back(m, n);
  for (size_t i = 0; i < base.size(); ++i) {
    for (size_t j = i; j < base.size(); ++j) {
      const auto [m1, n1] = base[i];
      const auto [m2, n2] = base[j];
      if (m1 + n1 + m2 + n2 > 18) continue;
      const auto pred = predict_product_shape({{m1, n1}, {m2, n2}});
      if (!pred.covered) continue;
      const ShapeClass sc = classify(gauss(m1, n1) * gauss(m2, n2));
      INFO("factors (", m1, ",", n1, ") x (", m2, ",", n2, ")");
      CHECK(pred.top_len == sc.top_len);
      CHECK(pred.strictly_unimodal == sc.strictly_unimodal);
    }
  }
}

TEST_CASE("prediction matches classification on three-factor products") {
  std::vector<std::pair<int, int>> base;
  for (int m = 1; m <= 3; ++m)
    for (int n = m; m * n <= 12; ++n) base.emplace_back(m, n);
  for (size_t i = 0; i < base.size(); ++i) {
    for (size_t j = i; j < base.size(); ++j) {
      for (size_t k = j; k < base.size(); ++k) {
        const int total = base[i].first * base[i].second + base[j].first * base[j].second +
                          base[k].first * base[k].second;
        if (total > 14) continue;
        const auto pred = predict_product_shape({base[i], base[j], base[k]});
        if (!pred.covered) continue;
        const ShapeClass sc =
            classify(gauss(base[i].first, base[i].second) *
                     gauss(base[j].first, base[j].second) *
                     gauss(base[k].first, base[k].second));
        INFO("factors (", base[i].first, ",", base[i].second, ")(", base[j].first, ",",
             base[j].second, ")(", base[k].first, ",", base[k].second, ") rule ", pred.rule);
        CHECK(pred.top_len == sc.top_len);
        CHECK(pred.strictly_unimodal == sc.strictly_unimodal);
        CHECK((sc.trapezoidal || sc.strictly_unimodal));
      }
    }
  }
}

TEST_CASE("row support of a product follows the interval rule") {
  // d_k != 0 iff some pair of nonzero rows (i,j) reaches k in
  // [i+j, i+j+min(N-2i, N'-2j)].
  const std::vector<Poly> ps = {gauss(2, 2), gauss(2, 3), gauss(3, 3),
                                gauss(4, 4), q_int(5),    q_int(2) * q_int(8)};
  for (const auto& p : ps) {
    for (const auto& r : ps) {
      const ShapeProfile bp = row_decompose(p);
      const ShapeProfile br = row_decompose(r);
      const ShapeProfile prod = row_decompose(p * r);
      for (int k = 0; k < static_cast<int>(prod.rows.size()); ++k) {
        bool reachable = false;
        for (int i = 0; i < static_cast<int>(bp.rows.size()); ++i) {
          if (!bp.row_nonzero(i)) continue;
          for (int j = 0; j < static_cast<int>(br.rows.size()); ++j) {
            if (!br.row_nonzero(j)) continue;
            const int lo = i + j;
            const int hi = i + j + std::min(bp.N - 2 * i, br.N - 2 * j);
            if (lo <= k && k <= hi) reachable = true;
          }
        }
        CHECK(prod.row_nonzero(k) == reachable);
      }
    }
  }
}

TEST_CASE("absorption: a centered row is swallowed by a longer one") {
  for (int b = 1; b <= 7; ++b) {
    for (int a = b % 2; a <= b; a += 2) {
      for (int c = b; c <= 8; ++c) {
        const Poly lhs = (q_int(a + 1).shifted((b - a) / 2) + q_int(b + 1)) * q_int(c + 1);
        const Poly rhs = q_int(b + 1) * q_int(c + 1);
        CHECK(shape_equivalent(row_decompose(lhs), row_decompose(rhs)));
      }
    }
  }
}

TEST_CASE("triple products of two-row Gaussians are strictly unimodal") {
  for (int n = 2; n <= 8; ++n)
    for (int m = n; m <= 8; ++m)
      for (int k = m; k <= 8; ++k)
        CHECK(classify(gauss(2, n) * gauss(2, m) * gauss(2, k)).strictly_unimodal);
}

TEST_SUITE_END();
