#include "qpluck/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qpluck/chains.hpp"
#include "qpluck/qcalc.hpp"
#include "qpluck/realize.hpp"
#include "qpluck/shape.hpp"
#include "qpluck/tree.hpp"

namespace qpluck {

int Report::passed() const {
  int n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(cases.size()) - passed(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "pak-panova", "lemma31",       "lemma34", "theorem41",
      "tree-invariants", "realizability", "chains"};
  return names;
}

namespace {

std::string pair_str(int m, int n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string shape_summary(const ShapeClass& sc) {
  std::ostringstream os;
  os << "top_len=" << sc.top_len << " strict=" << (sc.strictly_unimodal ? 1 : 0)
     << " trapezoidal=" << (sc.trapezoidal ? 1 : 0);
  return os.str();
}

// ---- pak-panova --------------------------------------------------------------

Report suite_pak_panova(const VerifyOptions& opts) {
  const int max = opts.max > 0 ? opts.max : 14;
  Report rep;
  rep.suite = "pak-panova";

  std::set<std::pair<int, int>> expected;
  for (auto [m, n] : gaussian_exceptions())
    if (n <= max) expected.insert({m, n});

  std::set<std::pair<int, int>> failing;
  for (int m = 5; m <= max; ++m) {
    for (int n = m; n <= max; ++n) {
      if (!classify(gauss(m, n)).almost_strictly_unimodal()) failing.insert({m, n});
    }
  }

  auto set_str = [](const std::set<std::pair<int, int>>& s) {
    std::string out;
    for (auto [m, n] : s) out += pair_str(m, n) + " ";
    return out;
  };
  rep.add("exceptions in 5<=m<=n<=" + std::to_string(max), set_str(expected),
          set_str(failing), failing == expected);

  for (auto [m, n] : expected) {
    const ShapeClass sc = classify(gauss(m, n));
    if (m == 6 && n == 6) {
      const bool ok = sc.top_type && *sc.top_type == std::array<int, 3>{2, 1, 2};
      rep.add("gauss(6,6) top type", "(2,1,2)",
              sc.top_type ? std::to_string((*sc.top_type)[0]) + "," +
                                std::to_string((*sc.top_type)[1]) + "," +
                                std::to_string((*sc.top_type)[2])
                          : "none",
              ok);
    } else {
      const bool ok = sc.almost_trapezoidal && sc.top_len == 2;
      rep.add("gauss" + pair_str(m, n) + " shape", "almost trapezoidal, top 2",
              shape_summary(sc), ok);
    }
  }
  return rep;
}

// ---- lemma31 / lemma34 -------------------------------------------------------

Report suite_lemma(int m, const VerifyOptions& opts) {
  const int max = opts.max > 0 ? opts.max : (m == 3 ? 12 : 10);
  Report rep;
  rep.suite = m == 3 ? "lemma31" : "lemma34";
  for (int n = (m == 3 ? 1 : 2); n <= max; ++n) {
    if (m == 4 && n == 4) continue;
    const LemmaReport lr = verify_shape_lemma(m, n);
    rep.add("gauss" + pair_str(m, n), lr.pattern, lr.pass ? lr.pattern : "pattern mismatch",
            lr.pass);
  }
  return rep;
}

// ---- theorem41 ---------------------------------------------------------------

std::vector<std::pair<int, int>> binomials_up_to_degree(int degree) {
  std::vector<std::pair<int, int>> base;
  for (int m = 1; m <= degree; ++m)
    for (int n = m; m * n <= degree; ++n) base.emplace_back(m, n);
  return base;
}

Report suite_theorem41(const VerifyOptions& opts) {
  const int degree = opts.degree > 0 ? opts.degree : 18;
  Report rep;
  rep.suite = "theorem41";
  const auto base = binomials_up_to_degree(degree - 1);
  for (size_t i = 0; i < base.size(); ++i) {
    for (size_t j = i; j < base.size(); ++j) {
      const auto [m1, n1] = base[i];
      const auto [m2, n2] = base[j];
      if (m1 * n1 + m2 * n2 > degree) continue;
      const auto pred = predict_product_shape({{m1, n1}, {m2, n2}});
      const ShapeClass sc = classify(gauss(m1, n1) * gauss(m2, n2));
      const std::string input = pair_str(m1, n1) + "x" + pair_str(m2, n2);

      const bool trapezoid_ok = sc.trapezoidal || sc.strictly_unimodal;
      if (!trapezoid_ok)
        rep.add(input, "trapezoidal or strictly unimodal", shape_summary(sc), false);

      if (!pred.covered) {
        rep.add(input, "covered", "uncovered", false);
        continue;
      }
      const bool ok = pred.top_len == sc.top_len &&
                      pred.strictly_unimodal == sc.strictly_unimodal && trapezoid_ok;
      std::ostringstream exp;
      exp << "top_len=" << pred.top_len << " strict=" << (pred.strictly_unimodal ? 1 : 0)
          << " [" << pred.rule << "]";
      rep.add(input, exp.str(), shape_summary(sc), ok);
    }
  }
  return rep;
}

// ---- tree-invariants ---------------------------------------------------------

// Plain recursion with no canonical-form memo, so that plane invariance is
// checked on an implementation that never assumes it.
Poly pluck_plain(const PlaneTree& t) {
  if (t.children.empty()) return Poly::one();
  Poly sum = Poly::zero();
  for (const auto& v : leaves(t)) {
    PlaneTree cut = t;
    PlaneTree* node = &cut;
    for (size_t d = 0; d + 1 < v.size(); ++d) node = &node->children[static_cast<size_t>(v[d])];
    node->children.erase(node->children.begin() + v.back());
    sum = sum + pluck_plain(cut).shifted(r_weight(t, v));
  }
  return sum;
}

void shuffle_children(PlaneTree& t, std::mt19937& rng) {
  std::shuffle(t.children.begin(), t.children.end(), rng);
  for (auto& c : t.children) shuffle_children(c, rng);
}

Report suite_tree_invariants(const VerifyOptions& opts) {
  const int max = opts.max > 0 ? opts.max : 8;
  Report rep;
  rep.suite = "tree-invariants";

  for (int e = 0; e <= max; ++e) {
    int count = 0;
    bool equal = true, ends = true, palin = true, unimod = true, branch = true;
    for_each_plane_tree(e, [&](const PlaneTree& t) {
      ++count;
      const Poly qr = pluck_recursive(t);
      const Poly qp = pluck_product(t);
      equal = equal && qr == qp;
      if (e >= 1) {
        ends = ends && qr[0] == 1 && qr[qr.degree()] == 1;
        palin = palin && is_symmetric(qr);
        unimod = unimod && is_unimodal(qr);
        branch = branch && qr[1] == branching_number(t);
      }
    });
    rep.add("plane trees with " + std::to_string(e) + " edges (" + std::to_string(count) + ")",
            "recursion = product; ends 1; palindromic; unimodal; c1 = branching",
            equal && ends && palin && unimod && branch ? "all hold" : "violated",
            equal && ends && palin && unimod && branch);
  }

  // Plane invariance under random reorderings, memo-free on both sides.
  std::mt19937 rng(opts.seed);
  bool invariant = true;
  const int shuffle_max = std::min(max, 7);
  for (int e = 0; e <= shuffle_max; ++e) {
    for (const auto& t : enumerate_rooted_trees(e)) {
      const Poly q = pluck_plain(t);
      for (int round = 0; round < 3; ++round) {
        PlaneTree s = t;
        shuffle_children(s, rng);
        if (pluck_plain(s) != q) invariant = false;
      }
    }
  }
  rep.add("child reordering, trees <= " + std::to_string(shuffle_max) + " edges",
          "plucking polynomial unchanged", invariant ? "unchanged" : "changed", invariant);

  // Wedge identity on all pairs with few edges.
  bool wedge_ok = true;
  for (int ea = 0; ea <= 5; ++ea) {
    for (int eb = 0; ea + eb <= 5; ++eb) {
      for (const auto& a : enumerate_rooted_trees(ea)) {
        for (const auto& b : enumerate_rooted_trees(eb)) {
          const Poly lhs = pluck_recursive(wedge({a, b}));
          const Poly rhs = gauss(ea, eb) * pluck_recursive(a) * pluck_recursive(b);
          if (lhs != rhs) wedge_ok = false;
        }
      }
    }
  }
  rep.add("wedge identity, pairs with <= 5 edges total",
          "Q(a v b) = gauss(|a|,|b|) Q(a) Q(b)", wedge_ok ? "holds" : "violated", wedge_ok);

  // Strings below the root never change the polynomial.
  bool reduce_ok = true;
  for (int e = 0; e <= std::min(max, 6); ++e) {
    for (const auto& t : enumerate_rooted_trees(e)) {
      const Poly q = pluck_recursive(t);
      PlaneTree strung = t;
      for (int s = 0; s < 3; ++s) {
        PlaneTree below;
        below.children.push_back(std::move(strung));
        strung = std::move(below);
        if (pluck_recursive(strung) != q) reduce_ok = false;
      }
      if (canonical(reduce_string(strung)) != canonical(reduce_string(t))) reduce_ok = false;
      const PlaneTree reduced = reduce_string(strung);
      if (!(reduce_string(reduced) == reduced)) reduce_ok = false;
    }
  }
  rep.add("strings preserve Q and reduce away", "Q(string(t)) = Q(t), reduction idempotent",
          reduce_ok ? "holds" : "violated", reduce_ok);

  // Exchange moves preserve the polynomial.
  bool exchange_ok = true;
  long applications = 0;
  for (int e = 0; e <= max; ++e) {
    for (const auto& t : enumerate_rooted_trees(e)) {
      const Poly q = pluck_recursive(t);
      for (const auto& [u1, u2] : exchange_sites(t)) {
        ++applications;
        if (pluck_recursive(exchange_move(t, u1, u2)) != q) exchange_ok = false;
      }
    }
  }
  rep.add("exchange moves, trees <= " + std::to_string(max) + " edges (" +
              std::to_string(applications) + " applications)",
          "Q preserved", exchange_ok ? "preserved" : "changed", exchange_ok);

  return rep;
}

// ---- realizability -----------------------------------------------------------

void scan_factor_lists(const std::vector<std::pair<int, int>>& base, size_t start,
                       int remaining, std::vector<std::pair<int, int>>& current,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (!current.empty()) fn(current);
  for (size_t i = start; i < base.size(); ++i) {
    const int d = base[i].first * base[i].second;
    if (d > remaining) continue;
    current.push_back(base[i]);
    scan_factor_lists(base, i, remaining - d, current, fn);
    current.pop_back();
  }
}

Report suite_realizability(const VerifyOptions& opts) {
  const int degree = opts.degree > 0 ? opts.degree : 20;
  Report rep;
  rep.suite = "realizability";

  const auto base = binomials_up_to_degree(degree);
  long scanned = 0;
  bool all_agree = true;
  std::vector<std::pair<int, int>> current;
  scan_factor_lists(base, 0, degree, current, [&](const std::vector<std::pair<int, int>>& fs) {
    ++scanned;
    const auto fraction = QFraction::from_binomials(fs).reduced();
    const bool criterion = fraction.numerator_squarefree();

    Poly target = Poly::one();
    for (auto [m, n] : fs) target = target * gauss(m, n);
    const int search_edges = fraction.num.empty() ? 0 : fraction.num.rbegin()->first;
    const auto trees = count_realizations(target, search_edges);

    bool agree = criterion == !trees.empty();
    if (criterion) {
      const PlaneTree built = realize_product(fs);
      const std::string c = canonical(built);
      agree = agree && std::any_of(trees.begin(), trees.end(), [&c](const PlaneTree& t) {
                return encode(t) == c;
              });
    }
    if (!agree) {
      all_agree = false;
      std::string in;
      for (auto [m, n] : fs) in += pair_str(m, n);
      rep.add(in, criterion ? "realizable" : "not realizable",
              std::to_string(trees.size()) + " trees found", false);
    }
  });
  rep.add("factor lists with total degree <= " + std::to_string(degree) + " (" +
              std::to_string(scanned) + " lists)",
          "criterion agrees with exhaustive search", all_agree ? "agree" : "disagree",
          all_agree);
  return rep;
}

// ---- chains ------------------------------------------------------------------

Report suite_chains(const VerifyOptions& opts) {
  const int max3 = opts.max > 0 ? opts.max : 12;
  const int max4 = std::max(1, max3 - 2);
  Report rep;
  rep.suite = "chains";

  for (int n = 1; n <= max3; ++n) {
    const ChainSpec spec = lindstrom_lengths(n);
    const bool recon = poly_from_chains(spec) == gauss(3, n);
    const bool card = spec.total_elements() ==
                      binomial_exact(static_cast<unsigned long>(n + 3), 3).get_si();
    rep.add("L(3," + std::to_string(n) + ")", "reconstructs gauss(3,n), full cardinality",
            recon && card ? "ok" : "mismatch", recon && card);
    if (n % 2 == 1) {
      const int k = (n - 1) / 2;
      const bool excl = !spec.contains_length(2) && !spec.contains_length(6 * k + 2);
      rep.add("L(3," + std::to_string(n) + ") excluded lengths",
              "no chain of 2 or " + std::to_string(6 * k + 2), excl ? "absent" : "present",
              excl);
    }
  }
  for (int n = 1; n <= max4; ++n) {
    const ChainSpec spec = west_lengths(n);
    const bool recon = poly_from_chains(spec) == gauss(4, n);
    const bool card = spec.total_elements() ==
                      binomial_exact(static_cast<unsigned long>(n + 4), 4).get_si();
    rep.add("L(4," + std::to_string(n) + ")", "reconstructs gauss(4,n), full cardinality",
            recon && card ? "ok" : "mismatch", recon && card);
    if (n != 1 && n != 4) {
      const bool excl = !spec.contains_length(3) && !spec.contains_length(4 * n - 1);
      rep.add("L(4," + std::to_string(n) + ") excluded lengths",
              "no chain of 3 or " + std::to_string(4 * n - 1), excl ? "absent" : "present",
              excl);
    }
  }
  return rep;
}

}  // namespace

Report run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "pak-panova") return suite_pak_panova(opts);
  if (name == "lemma31") return suite_lemma(3, opts);
  if (name == "lemma34") return suite_lemma(4, opts);
  if (name == "theorem41") return suite_theorem41(opts);
  if (name == "tree-invariants") return suite_tree_invariants(opts);
  if (name == "realizability") return suite_realizability(opts);
  if (name == "chains") return suite_chains(opts);
  throw InvalidInput("unknown suite: " + name);
}

}  // namespace qpluck
