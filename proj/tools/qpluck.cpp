// qpluck: plucking polynomials of rooted trees, Gaussian binomial shapes,
// chain decompositions and tree realizations, with exact integer arithmetic.
//
// Output is one JSON object per line so runs can be diffed and piped;
// --pretty switches to a human-readable rendering. Exit codes: 0 ok,
// 2 usage or parse failure, 3 domain error, 4 not realizable, 5 budget.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpluck/catalog.hpp"
#include "qpluck/chains.hpp"
#include "qpluck/qcalc.hpp"
#include "qpluck/realize.hpp"
#include "qpluck/shape.hpp"
#include "qpluck/tree.hpp"
#include "qpluck/verify.hpp"

using json = nlohmann::json;
using namespace qpluck;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InvalidInput("bad integer: " + tok);
    }
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ';')) {
    const auto xs = parse_int_list(tok);
    if (xs.size() != 2) throw InvalidInput("binomial factor needs exactly two numbers: " + tok);
    out.emplace_back(xs[0], xs[1]);
  }
  if (out.empty()) throw InvalidInput("empty factor list");
  return out;
}

json shape_record(const ShapeClass& sc) {
  json rle = json::array();
  for (const auto& [value, count] : sc.rle) rle.push_back({value.get_str(), count});
  json top = nullptr;
  if (sc.top_type) {
    top = std::to_string((*sc.top_type)[0]) + "," + std::to_string((*sc.top_type)[1]) + "," +
          std::to_string((*sc.top_type)[2]);
  }
  return json{{"record", "shape"},
              {"N", sc.N},
              {"j", sc.j},
              {"top_len", sc.top_len},
              {"strict_below", sc.strict_below},
              {"almost_strict_below", sc.almost_strict_below},
              {"rle", rle},
              {"trapezoidal", sc.trapezoidal},
              {"almost_trapezoidal", sc.almost_trapezoidal},
              {"strictly_unimodal", sc.strictly_unimodal},
              {"top_type", top}};
}

void print_shape_pretty(const ShapeClass& sc) {
  std::printf("degree %d, peak at %d, top length %d\n", sc.N, sc.j, sc.top_len);
  std::printf("  trapezoidal=%s almost_trapezoidal=%s strictly_unimodal=%s\n",
              sc.trapezoidal ? "yes" : "no", sc.almost_trapezoidal ? "yes" : "no",
              sc.strictly_unimodal ? "yes" : "no");
  if (sc.top_type)
    std::printf("  top type (%d,%d,%d)\n", (*sc.top_type)[0], (*sc.top_type)[1],
                (*sc.top_type)[2]);
}

struct PolyInput {
  std::string tree;
  std::string binoms;
  std::string qints;
  std::string coeffs;

  void add_options(CLI::App* cmd, bool with_coeffs) {
    cmd->add_option("--tree", tree, "balanced-parentheses tree encoding");
    cmd->add_option("--binoms,--binom", binoms,
                    "Gaussian binomial factors, e.g. \"4,4;2,3\"");
    cmd->add_option("--qints", qints, "q-integer indices, e.g. \"3,5\"");
    if (with_coeffs) cmd->add_option("--coeffs", coeffs, "coefficient CSV, lowest degree first");
  }

  Poly value(std::string* description) const {
    int given = !tree.empty() + !binoms.empty() + !qints.empty() + !coeffs.empty();
    if (given != 1)
      throw InvalidInput("give exactly one of --tree, --binoms, --qints, --coeffs");
    if (!tree.empty()) {
      *description = "tree " + tree;
      return pluck_product(parse_tree(tree));
    }
    if (!binoms.empty()) {
      *description = "binomials " + binoms;
      Poly p = Poly::one();
      for (auto [m, n] : parse_pair_list(binoms)) p = p * gauss(m, n);
      return p;
    }
    if (!qints.empty()) {
      *description = "q-integers " + qints;
      Poly p = Poly::one();
      for (int a : parse_int_list(qints)) p = p * q_int(a);
      return p;
    }
    *description = "coefficients";
    return Poly::from_csv(coeffs);
  }
};

int cmd_compute(const PolyInput& input, bool pretty) {
  std::string desc;
  const Poly p = input.value(&desc);
  const ShapeProfile prof = row_decompose(p);
  const ShapeClass sc = classify(p);

  if (pretty) {
    std::printf("input: %s\n", desc.c_str());
    std::printf("coefficients: %s\n", p.to_csv().c_str());
    std::printf("value at q=1: %s\n", p.eval_one().get_str().c_str());
    std::string rows;
    for (const auto& b : prof.rows) {
      if (!rows.empty()) rows += ',';
      rows += b.get_str();
    }
    std::printf("row multiplicities: %s\n", rows.c_str());
    print_shape_pretty(sc);
    return 0;
  }
  std::cout << json{{"record", "coeffs"},
                    {"input", desc},
                    {"csv", p.to_csv()},
                    {"degree", p.degree()},
                    {"value_at_1", p.eval_one().get_str()}}
            << "\n";
  json rows = json::array();
  for (const auto& b : prof.rows) rows.push_back(b.get_str());
  std::cout << json{{"record", "rows"}, {"N", prof.N}, {"multiplicities", rows}} << "\n";
  std::cout << shape_record(sc) << "\n";
  return 0;
}

int cmd_classify(const PolyInput& input, bool pretty) {
  std::string desc;
  const Poly p = input.value(&desc);
  const ShapeClass sc = classify(p);
  if (pretty) {
    std::printf("input: %s\n", desc.c_str());
    print_shape_pretty(sc);
  } else {
    std::cout << shape_record(sc) << "\n";
  }
  return 0;
}

int cmd_realize(const std::string& binoms, const std::string& qints, bool pretty) {
  if (binoms.empty() == qints.empty())
    throw InvalidInput("give exactly one of --binoms, --qints");
  PlaneTree t;
  try {
    t = binoms.empty() ? realize_qints(parse_int_list(qints))
                       : realize_product(parse_pair_list(binoms));
  } catch (const NotRealizable& e) {
    if (pretty)
      std::printf("NOT-REALIZABLE: %s\n", e.what());
    else
      std::cout << json{{"record", "not-realizable"},
                        {"witness", e.witness},
                        {"reason", e.what()}}
                << "\n";
    return 4;
  }
  const Poly q = pluck_product(t);
  if (pretty) {
    std::printf("tree: %s\n", encode(t).c_str());
    std::printf("edges: %d\ncoefficients: %s\n", t.edge_count(), q.to_csv().c_str());
  } else {
    std::cout << json{{"record", "realization"},
                      {"tree", encode(t)},
                      {"edges", t.edge_count()},
                      {"coeffs", q.to_csv()}}
              << "\n";
  }
  return 0;
}

int cmd_enumerate(int edges, const std::string& out_path, bool pretty) {
  const auto entries = build_catalog(edges);
  if (!out_path.empty()) {
    write_catalog(out_path, entries);
  } else {
    for (const auto& e : entries) std::cout << catalog_line(e) << "\n";
  }
  const auto groups = collision_groups(entries);
  long collided = 0;
  for (const auto& g : groups) {
    collided += static_cast<long>(g.trees.size());
    if (pretty) {
      std::printf("collision (%d edges, %zu trees, %s): %s\n", g.edges, g.trees.size(),
                  g.exchange_connected ? "exchange-connected" : "not connected by exchanges",
                  g.q.to_csv().c_str());
      for (const auto& t : g.trees) std::printf("  %s\n", t.c_str());
    } else {
      std::cout << json{{"record", "collision-group"},
                        {"edges", g.edges},
                        {"coeffs", g.q.to_csv()},
                        {"size", g.trees.size()},
                        {"trees", g.trees},
                        {"exchange_connected", g.exchange_connected}}
                << "\n";
    }
  }
  if (pretty)
    std::printf("%zu reduced trees, %zu collision groups (%ld trees)\n", entries.size(),
                groups.size(), collided);
  else
    std::cout << json{{"record", "collision-summary"},
                      {"max_edges", edges},
                      {"catalog_size", entries.size()},
                      {"groups", groups.size()},
                      {"colliding_trees", collided}}
              << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, bool pretty) {
  const Report rep = run_suite(suite, opts);
  if (pretty) {
    std::printf("suite %s\n", rep.suite.c_str());
    for (const auto& c : rep.cases)
      std::printf("  %s  %s | expected %s | got %s\n", c.pass ? "pass" : "FAIL",
                  c.input.c_str(), c.expected.c_str(), c.computed.c_str());
    std::printf("%d passed, %d failed\n", rep.passed(), rep.failed());
  } else {
    for (const auto& c : rep.cases)
      std::cout << json{{"record", "case"},
                        {"suite", rep.suite},
                        {"input", c.input},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass}}
                << "\n";
    std::cout << json{{"record", "summary"},
                      {"suite", rep.suite},
                      {"passed", rep.passed()},
                      {"failed", rep.failed()}}
              << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plucking polynomials of rooted trees: exact computation, shape "
               "classification, enumeration and realization"};
  app.require_subcommand(1);
  bool pretty = false;
  auto add_pretty = [&pretty](CLI::App* cmd) {
    cmd->add_flag("--pretty", pretty, "human-readable output instead of JSON records");
  };
  add_pretty(&app);

  PolyInput compute_in;
  auto* compute = app.add_subcommand("compute", "coefficients, row decomposition and shape");
  compute_in.add_options(compute, false);
  add_pretty(compute);

  PolyInput classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "shape classification only");
  classify_in.add_options(classify_cmd, true);
  add_pretty(classify_cmd);

  std::string realize_binoms, realize_qints_arg;
  auto* realize = app.add_subcommand("realize", "construct a tree with the given polynomial");
  realize->add_option("--binoms,--binom", realize_binoms, "factors, e.g. \"3,6;2,2\"");
  realize->add_option("--qints", realize_qints_arg, "strictly increasing indices, e.g. \"4,5,8\"");
  add_pretty(realize);

  int edges = 0;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "catalog reduced trees and report collisions");
  enumerate->add_option("--edges", edges, "catalog trees with up to this many edges")
      ->required();
  enumerate->add_option("--out", out_path, "write the catalog to this file (atomic)");
  add_pretty(enumerate);

  std::string suite;
  VerifyOptions opts;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "one of: pak-panova, lemma31, lemma34, theorem41, "
                                     "tree-invariants, realizability, chains")
      ->required();
  verify->add_option("--max", opts.max, "range bound (suite-specific default)");
  verify->add_option("--degree", opts.degree, "total-degree bound (suite-specific default)");
  verify->add_option("--seed", opts.seed, "seed for randomized shuffle checks");
  add_pretty(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return cmd_compute(compute_in, pretty);
    if (*classify_cmd) return cmd_classify(classify_in, pretty);
    if (*realize) return cmd_realize(realize_binoms, realize_qints_arg, pretty);
    if (*enumerate) return cmd_enumerate(edges, out_path, pretty);
    if (*verify) return cmd_verify(suite, opts, pretty);
  } catch (const BudgetExceeded& e) {
    std::fprintf(stderr, "budget exceeded: %s\n", e.what());
    return 5;
  } catch (const NotRealizable& e) {
    std::fprintf(stderr, "not realizable: %s\n", e.what());
    return 4;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "bad input: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}
