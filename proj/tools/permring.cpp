// permring: command-line front end for the alternating-permutation model of
// H*(X^R_{A_n}; Q) and its homology oracle.

#include "permring/cache.hpp"
#include "permring/coeff_graph.hpp"
#include "permring/cup_ring.hpp"
#include "permring/homology.hpp"
#include "permring/rewrite.hpp"
#include "permring/serialize.hpp"
#include "permring/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

using namespace permring;

namespace {

constexpr int kUsage = 2;
constexpr int kVerifyFailed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<int> n;
  std::string set, perm, alpha, x, a, b;
  std::string method = "memo";
  std::string format = "text";
  std::string cache_dir;
  std::string kind = "hat";
  std::uint64_t seed = VerifyOptions{}.seed;
  int trials = VerifyOptions{}.trials;
  bool dot = false;
};

// Integers print bare in text mode; JSON always carries "p/q".
std::string pretty(const Rational& q) { return q.get_str(); }

std::string pretty(const AltVector& v) { return v.is_zero() ? "0" : to_string(v); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::unique_ptr<DiskCache> open_cache(const Config& c) {
  if (c.cache_dir.empty()) return nullptr;
  return std::make_unique<DiskCache>(c.cache_dir);
}

int ambient(const Config& c, Label max_label) {
  const int n = c.n.value_or(std::max<int>(1, max_label - 1));
  if (n < 1 || max_label > n + 1) throw UsageError("--n " + std::to_string(n) + " is too small for the given labels");
  return n;
}

AltVector cached_reduce(const BlockPerm& x, const DiskCache* cache) {
  const std::string key = "reduce:" + to_string(x);
  if (cache) {
    if (auto hit = cache->load(key)) {
      AltVector v = alt_vector_from_json(*hit);
      if (v.index_set() == x.index_set()) return v;
      std::cerr << "warning: cache entry for " << key << " has the wrong index set; recomputing\n";
    }
  }
  AltVector v = reduce(x);
  if (cache) cache->store(key, to_json(v));
  return v;
}

int cmd_alt_basis(const Config& c) {
  const IndexSet s = parse_index_set(c.set);
  if (c.n) ambient(c, s.max_label());
  const auto basis = alt_basis(s);
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& x : basis) list.push_back(to_json(x));
    emit({{"index_set", to_json(s)}, {"count", basis.size()}, {"basis", list}});
  } else {
    for (const auto& x : basis) std::cout << "(" << to_string(x) << ")\n";
    std::cout << "count: " << basis.size() << "\n";
  }
  return 0;
}

int cmd_reduce(const Config& c) {
  const BlockPerm x = parse_block_perm(c.perm);
  auto cache = open_cache(c);
  const AltVector v = cached_reduce(x, cache.get());
  if (c.format == "json") {
    Json j = to_json(v);
    j["input"] = to_json(x);
    emit(j);
  } else {
    std::cout << pretty(v) << "\n";
  }
  return 0;
}

int cmd_coeff(const Config& c) {
  const BlockPerm alpha = parse_block_perm(c.alpha);
  const BlockPerm x = parse_block_perm(c.x);
  if (!is_alternating(alpha)) throw UsageError("--alpha (" + to_string(alpha) + ") is not alternating");
  if (!alpha.same_set(x)) throw UsageError("--alpha and --x are permutations of different sets");
  Rational value;
  if (c.method == "walks") {
    value = topo_coeff_walks(alpha, x);
  } else if (c.method == "memo") {
    value = topo_coeff_memo(alpha, x);
  } else if (c.method == "rewrite") {
    auto cache = open_cache(c);
    value = cached_reduce(x, cache.get()).coefficient(alpha);
  } else {
    const IndexSet s = x.index_set();
    const auto hat = build_hat(ambient(c, s.max_label()), s);
    value = express_in_alt_basis(x, hat).coefficient(alpha);
  }
  if (c.format == "json")
    emit({{"alpha", to_json(alpha)}, {"x", to_json(x)}, {"method", c.method}, {"coefficient", to_json(value)}});
  else
    std::cout << pretty(value) << "\n";
  return 0;
}

AltVector parse_graded(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(flag + " expects grade:perm, e.g. 2,5:2,5");
  const IndexSet grade = parse_index_set(text.substr(0, colon));
  const BlockPerm x = parse_block_perm(text.substr(colon + 1));
  if (x.mask() != grade.mask())
    throw UsageError(flag + ": (" + to_string(x) + ") is not a permutation of {" + grade.to_string() + "}");
  return reduce(x);
}

void print_class(const GradedClass& u) {
  if (u.is_zero()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [grade, v] : u.components()) std::cout << "{" << grade.to_string() << "}: " << pretty(v) << "\n";
}

int cmd_cup(const Config& c) {
  const AltVector a = parse_graded(c.a, "--a");
  const AltVector b = parse_graded(c.b, "--b");
  const int n = ambient(c, std::max(a.index_set().max_label(), b.index_set().max_label()));
  auto cache = open_cache(c);
  const std::string key = "cup:" + to_json(a).dump() + "|" + to_json(b).dump();
  std::optional<AltVector> product;
  if (cache) {
    if (auto hit = cache->load(key)) product = alt_vector_from_json(*hit);
  }
  if (!product) {
    product = cup(a, b);
    if (cache) cache->store(key, to_json(*product));
  }
  const GradedClass u = GradedClass::of(n, *product);
  if (c.format == "json")
    emit(to_json(u));
  else
    print_class(u);
  return 0;
}

int cmd_betti(const Config& c) {
  if (!c.n) throw UsageError("betti requires --n");
  const int n = *c.n;
  if (n < 1 || n > 6) throw UsageError("betti supports 1 <= n <= 6");
  Json rows = Json::array();
  bool agree = true;
  for (int k = 0; 2 * k <= n + 1; ++k) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), n + 1, 2 * k);
    const Integer formula = binom * euler_zigzag(2 * k);
    Integer oracle = 0;
    for (const auto& s : even_subsets(n, k))
      oracle += Integer(static_cast<unsigned long>(reduced_betti(build_induced(n, s), k - 1)));
    agree = agree && oracle == formula;
    rows.push_back({{"k", k}, {"formula", formula.get_str()}, {"oracle", oracle.get_str()}});
  }
  if (c.format == "json") {
    emit({{"n", n}, {"rows", rows}, {"agree", agree}});
  } else {
    for (const auto& r : rows)
      std::cout << "k=" << r["k"].get<int>() << " beta=" << r["formula"].get<std::string>()
                << " oracle=" << r["oracle"].get<std::string>() << "\n";
  }
  return agree ? 0 : kVerifyFailed;
}

int cmd_verify(const Config& c) {
  VerifyOptions opts;
  opts.n = c.n.value_or(4);
  if (opts.n < 1 || opts.n > 6) throw UsageError("verify supports 1 <= n <= 6");
  if (c.trials < 0) throw UsageError("--trials must be nonnegative");
  opts.seed = c.seed;
  opts.trials = c.trials;
  auto cache = open_cache(c);
  opts.cache = cache.get();
  const auto results = run_verify(opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (c.format == "json") {
    Json suites = Json::array();
    for (const auto& r : results) suites.push_back(to_json(r));
    emit({{"n", opts.n}, {"seed", opts.seed}, {"trials", opts.trials}, {"passed", ok}, {"suites", suites}});
  } else {
    for (const auto& r : results) {
      std::cout << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.checked << " checks)";
      if (!r.note.empty()) std::cout << " - " << r.note;
      std::cout << "\n";
      for (const auto& w : r.witnesses) std::cout << "    " << w << "\n";
    }
    std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : kVerifyFailed;
}

int cmd_graph(const Config& c) {
  const IndexSet s = parse_index_set(c.set);
  const CoeffGraph g = build_graph(s);
  const std::string format = c.dot ? "dot" : c.format;
  if (format == "dot") {
    std::cout << emit_dot(g);
  } else if (format == "json") {
    emit(to_json(g));
  } else {
    const Json j = to_json(g);
    for (const auto& arc : j["arcs"])
      std::cout << "(" << arc["alpha"].get<std::string>() << ") -> (" << arc["x"].get<std::string>() << ") ["
                << arc["weight"].get<int>() << "]\n";
    std::cout << "arcs: " << g.arcs.size() << " (loops: " << g.loop_count() << ")\n";
  }
  return 0;
}

int cmd_complex(const Config& c) {
  if (!c.n) throw UsageError("complex requires --n");
  const int n = *c.n;
  if (n < 1 || n > 6) throw UsageError("complex supports 1 <= n <= 6");
  const IndexSet s = parse_index_set(c.set);
  if (!s.fits(n)) throw UsageError("--set does not fit [n+1]");
  const SimplicialComplex k = c.kind == "coxeter" ? build_coxeter(n) : c.kind == "induced" ? build_induced(n, s) : build_hat(n, s);
  Json vertices = Json::array(), facets = Json::array();
  for (const auto& v : k.vertices()) vertices.push_back(v.labels());
  for (const auto& f : k.facets()) {
    Json chain = Json::array();
    for (const auto& v : f) chain.push_back(v.labels());
    facets.push_back(chain);
  }
  emit({{"n", n},
        {"kind", c.kind},
        {"index_set", to_json(s)},
        {"dimension", k.dimension()},
        {"vertices", vertices},
        {"facets", facets}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology ring of real permutohedral varieties via alternating permutations"};
  app.require_subcommand(1);
  Config c;

  auto with_n = [&c](CLI::App* sub) { sub->add_option("--n", c.n, "ambient rank (ground set [n+1])"); };
  auto with_format = [&c](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto with_cache = [&c](CLI::App* sub) { sub->add_option("--cache-dir", c.cache_dir, "directory for advisory JSON cache"); };

  auto* alt = app.add_subcommand("alt-basis", "list the alternating permutations of an index set");
  alt->add_option("--set", c.set, "index set, e.g. 1,2,3,4")->required();
  with_n(alt);
  with_format(alt, {"text", "json"});

  auto* red = app.add_subcommand("reduce", "normal form of a permutation in the alternating basis");
  red->add_option("--perm", c.perm, "permutation in block notation, e.g. 1,2/3,4")->required();
  with_format(red, {"text", "json"});
  with_cache(red);

  auto* coeff = app.add_subcommand("coeff", "coefficient of alpha in the expansion of x");
  coeff->add_option("--alpha", c.alpha, "alternating permutation")->required();
  coeff->add_option("--x", c.x, "permutation")->required();
  coeff->add_option("--method", c.method, "walks | memo | rewrite | homology")
      ->check(CLI::IsMember({"walks", "memo", "rewrite", "homology"}));
  with_n(coeff);
  with_format(coeff, {"text", "json"});
  with_cache(coeff);

  auto* cupc = app.add_subcommand("cup", "cup product of two classes");
  cupc->add_option("--a", c.a, "grade:perm, e.g. 1,3,4,6:1,4/3,6")->required();
  cupc->add_option("--b", c.b, "grade:perm, e.g. 2,5:2,5")->required();
  with_n(cupc);
  with_format(cupc, {"text", "json"});
  with_cache(cupc);

  auto* betti = app.add_subcommand("betti", "Betti numbers: closed formula against the homology oracle");
  with_n(betti);
  with_format(betti, {"text", "json"});

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  with_n(ver);
  ver->add_option("--seed", c.seed, "random seed");
  ver->add_option("--trials", c.trials, "random trials per randomized suite (0 skips them)");
  with_format(ver, {"text", "json"});
  with_cache(ver);

  auto* graph = app.add_subcommand("graph", "the weighted digraph D_I");
  graph->add_option("--set", c.set, "index set")->required();
  graph->add_flag("--dot", c.dot, "emit Graphviz DOT");
  with_format(graph, {"text", "json", "dot"});

  auto* cx = app.add_subcommand("complex", "export a complex as a facet list (JSON)");
  with_n(cx);
  cx->add_option("--set", c.set, "index set");
  cx->add_option("--kind", c.kind, "hat | induced | coxeter")->check(CLI::IsMember({"hat", "induced", "coxeter"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*alt) return cmd_alt_basis(c);
    if (*red) return cmd_reduce(c);
    if (*coeff) return cmd_coeff(c);
    if (*cupc) return cmd_cup(c);
    if (*betti) return cmd_betti(c);
    if (*ver) return cmd_verify(c);
    if (*graph) return cmd_graph(c);
    if (*cx) return cmd_complex(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
