#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "permring/coeff_graph.hpp"
#include "permring/rewrite.hpp"

#include <random>

using namespace permring;

namespace {

BlockPerm P(const char* s) { return parse_block_perm(s); }

using ArcSet = std::set<std::tuple<std::string, std::string, int>>;

ArcSet non_loop_arcs_within(const CoeffGraph& g, const std::set<BlockPerm>& vertices) {
  ArcSet out;
  for (const auto& [arc, w] : g.arcs) {
    const auto& [a, x] = arc;
    if (a != x && vertices.count(a) && vertices.count(x)) out.emplace(to_string(a), to_string(x), w);
  }
  return out;
}

}  // namespace

TEST_CASE("face_decompose on a four-element set") {
  const BlockPerm y = P("1,2/3,4");
  for (const char* a : {"1,3/2,4", "1,4/2,3", "2,3/1,4", "2,4/1,3"}) {
    auto d = face_decompose(P(a), y);
    REQUIRE(d.has_value());
    CHECK(apply(*d, P(a)) == y);
  }
  CHECK_FALSE(face_decompose(P("3,4/1,2"), y).has_value());
  CHECK_FALSE(face_decompose(P("3,5/2,6/7,9"), P("7,9/5,6/2,3")).has_value());
}

TEST_CASE("face_decompose agrees with the set-level face test") {
  for (oracle::Perm ground : {oracle::Perm{1, 2, 3, 4}, oracle::Perm{1, 2, 3, 4, 5, 6}}) {
    const auto perms = oracle::all_perms(ground);
    for (const auto& a : perms) {
      const BlockPerm x = BlockPerm::from_entries(a);
      for (const auto& b : perms) {
        const BlockPerm y = BlockPerm::from_entries(b);
        const auto d = face_decompose(x, y);
        CHECK(d.has_value() == oracle::is_face(a, b));
        if (d) CHECK(apply(*d, x) == y);
      }
    }
  }
}

TEST_CASE("s_weight") {
  CHECK(s_weight(P("1,3/2,4"), P("1,2/3,4")) == 1);
  CHECK(s_weight(P("1,4/2,3"), P("1,2/3,4")) == 0);
  CHECK(s_weight(P("2,3/1,4"), P("1,2/3,4")) == 0);
  CHECK(s_weight(P("2,4/1,3"), P("1,2/3,4")) == 1);
  CHECK(s_weight(P("3,4/1,2"), P("1,3/2,4")) == 1);
  for (const auto& a : alt_basis(parse_index_set("1,2,3,4,5,6"))) CHECK(s_weight(a, a) == 1);
  CHECK_THROWS_AS(s_weight(P("1,2/3,4"), P("1,2/3,4")), std::invalid_argument);
  CHECK_THROWS_AS(s_weight(P("3,4/1,2"), P("1,2/3,4")), std::invalid_argument);
}

TEST_CASE("small digraph matches the figure") {
  const CoeffGraph g = build_graph(parse_index_set("1,2,3,4"));
  std::set<BlockPerm> vs{P("1,2/3,4")};
  for (const auto& a : alt_basis(g.index_set)) vs.insert(a);
  std::size_t loops = 0;
  for (const auto& [arc, w] : g.arcs)
    if (arc.first == arc.second) {
      ++loops;
      CHECK(w == 1);
    }
  CHECK(loops == 5);
  CHECK(g.loop_count() == 5);
  CHECK(non_loop_arcs_within(g, vs) == ArcSet{{"1,3/2,4", "1,2/3,4", 1},
                                                {"1,4/2,3", "1,2/3,4", 0},
                                                {"2,3/1,4", "1,2/3,4", 0},
                                                {"2,4/1,3", "1,2/3,4", 1},
                                                {"3,4/1,2", "1,3/2,4", 1}});
  CHECK_THROWS_AS(build_graph(IndexSet{}), std::invalid_argument);
}

TEST_CASE("larger digraph matches the figure") {
  const BlockPerm root = P("7,9/5,6/2,3");
  std::set<BlockPerm> vs{root};
  for (const auto& x : walk_descendants(root))
    if (is_block_ascending(x)) vs.insert(x);
  CHECK(vs.size() == 20);
  const CoeffGraph g = build_graph(root.index_set());
  // Transcribed from the drawing (27 arcs).
  const ArcSet want{
      {"5,7/2,9/3,6", "5,7/2,3/6,9", 0}, {"5,7/2,9/3,6", "2,5/7,9/3,6", 0}, {"5,7/2,9/3,6", "2,5/3,7/6,9", 0},
      {"2,5/3,7/6,9", "2,3/5,6/7,9", 1}, {"5,7/2,6/3,9", "5,7/2,3/6,9", 1}, {"5,7/2,6/3,9", "2,5/3,7/6,9", 1},
      {"5,7/2,6/3,9", "2,5/6,7/3,9", 1}, {"2,7/5,9/3,6", "2,5/3,7/6,9", 1}, {"2,7/5,9/3,6", "2,5/7,9/3,6", 1},
      {"2,7/5,9/3,6", "2,7/3,5/6,9", 1}, {"5,6/2,7/3,9", "2,5/6,7/3,9", 0}, {"5,6/2,7/3,9", "5,6/2,3/7,9", 1},
      {"5,6/2,7/3,9", "2,5/3,6/7,9", 1}, {"2,7/3,9/5,6", "2,7/3,5/6,9", 0}, {"2,7/3,9/5,6", "2,3/7,9/5,6", 1},
      {"2,7/3,9/5,6", "2,3/5,7/6,9", 1}, {"5,7/6,9/2,3", "5,7/2,6/3,9", 1}, {"5,7/6,9/2,3", "5,6/2,7/3,9", 1},
      {"5,7/6,9/2,3", "5,6/7,9/2,3", 1}, {"7,9/2,5/3,6", "7,9/2,3/5,6", 1}, {"7,9/2,5/3,6", "2,7/5,9/3,6", 1},
      {"7,9/2,5/3,6", "2,7/3,9/5,6", 1}, {"7,9/5,6/2,3", "5,7/2,9/3,6", 0}, {"7,9/5,6/2,3", "5,7/6,9/2,3", 1},
      {"7,9/5,6/2,3", "7,9/2,5/3,6", 1}, {"2,5/3,7/6,9", "2,5/3,6/7,9", 1}, {"2,5/3,7/6,9", "2,3/5,7/6,9", 1}};
  CHECK(want.size() == 27);
  CHECK(non_loop_arcs_within(g, vs) == want);
}

TEST_CASE("walk enumeration on known cases") {
  const BlockPerm root = P("7,9/5,6/2,3");
  std::multiset<int> weights;
  for_each_walk(root, P("2,3/5,6/7,9"), [&](const Walk& w) { weights.insert(w.weight); });
  CHECK(weights == std::multiset<int>{1, 4, 4});
  weights.clear();
  for_each_walk(root, P("5,7/2,3/6,9"), [&](const Walk& w) { weights.insert(w.weight); });
  CHECK(weights.size() == 2);
  CHECK(*weights.begin() % 2 != *weights.rbegin() % 2);

  CHECK(topo_coeff_walks(P("3,4/1,2"), P("1,2/3,4")) == -1);
  CHECK(topo_coeff_walks(root, P("2,3/5,6/7,9")) == -1);
  CHECK(topo_coeff_memo(root, P("5,7/2,3/6,9")) == 0);
  CHECK(topo_coeff_memo(root, P("3,5/2,6/7,9")) == 0);
  CHECK(topo_coeff_memo(P("1,3/2,4"), P("1,2/3,4")) == 1);
  for (const auto& [a, c] : topo_coeffs_memo(P("1,2/3,4")))
    CHECK(c == coeff_via_rewrite(a, P("1,2/3,4")));
}

TEST_CASE("walks, memo and rewriting agree") {
  for (oracle::Perm ground : {oracle::Perm{1, 2}, oracle::Perm{1, 2, 3, 4}, oracle::Perm{1, 2, 3, 4, 5, 6}}) {
    const auto basis = alt_basis(IndexSet(ground));
    for (const auto& e : oracle::all_perms(ground)) {
      const BlockPerm x = BlockPerm::from_entries(e);
      const AltVector r = reduce(x);
      const auto memo = topo_coeffs_memo(x);
      for (const auto& a : basis) {
        const Rational want = r.coefficient(a);
        CHECK(topo_coeff_walks(a, x) == want);
        CHECK((memo.count(a) ? memo.at(a) : Rational(0)) == want);
      }
    }
  }
}

TEST_CASE("every non-loop arc increases along the order, up to block swaps") {
  const CoeffGraph g = build_graph(parse_index_set("1,2,3,4,5,6"));
  for (const auto& [arc, w] : g.arcs) {
    CHECK(is_alternating(arc.first));
    if (block_normalize(arc.second).first != arc.first) CHECK(prec_less(arc.first, arc.second));
    CHECK(w == s_weight(arc.first, arc.second));
  }
  CHECK(g.loop_count() == 61);
}

TEST_CASE("in_sources and walk_ancestors are the reverse of out_arcs") {
  const auto basis = alt_basis(parse_index_set("1,2,3,4,5,6"));
  std::map<BlockPerm, std::set<BlockPerm>> into;
  for (const auto& a : basis)
    for (const auto& arc : out_arcs(a)) into[arc.target].insert(a);
  for (const auto& [x, srcs] : into) {
    const auto got = in_sources(x);
    CHECK(std::set<BlockPerm>(got.begin(), got.end()) == srcs);
  }
  const BlockPerm x = P("1,2/3,4/5,6");
  for (const auto& b : walk_ancestors(x)) CHECK(walk_descendants(b).count(x) == 1);
}

TEST_CASE("dot output") {
  const CoeffGraph g = build_graph(parse_index_set("1,2,3,4"));
  const std::string dot = emit_dot(g, std::vector<BlockPerm>{P("1,2/3,4"), P("1,3/2,4")}, false);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1,3/2,4") != std::string::npos);
  CHECK(emit_dot(g) == emit_dot(build_graph(parse_index_set("1,2,3,4"))));
}
