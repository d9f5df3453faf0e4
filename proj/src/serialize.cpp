#include "permring/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace permring {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const IndexSet& s) {
  Json a = Json::array();
  for (Label v : s.elements()) a.push_back(v);
  return a;
}

IndexSet index_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("index set must be an array");
  return IndexSet(j.get<std::vector<Label>>());
}

Json to_json(const BlockPerm& x) { return to_string(x); }

BlockPerm block_perm_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("permutation must be a string");
  return parse_block_perm(j.get<std::string>());
}

namespace {

std::vector<std::pair<BlockPerm, Rational>> canonical_terms(const AltVector& v) {
  std::vector<std::pair<BlockPerm, Rational>> terms(v.terms().begin(), v.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return CanonicalOrder{}(a.first, b.first); });
  return terms;
}

}  // namespace

Json to_json(const AltVector& v) {
  Json terms = Json::array();
  for (const auto& [x, c] : canonical_terms(v)) terms.push_back({{"coeff", to_json(c)}, {"perm", to_json(x)}});
  return {{"index_set", to_json(v.index_set())}, {"terms", terms}};
}

AltVector alt_vector_from_json(const Json& j) {
  AltVector v(index_set_from_json(j.at("index_set")));
  for (const auto& t : j.at("terms")) {
    BlockPerm x = block_perm_from_json(t.at("perm"));
    if (!is_alternating(x)) throw std::invalid_argument(to_string(x) + " is not alternating");
    v.add(x, rational_from_json(t.at("coeff")));
  }
  return v;
}

Json to_json(const GradedClass& u) {
  Json comps = Json::array();
  for (const auto& [_, v] : u.components()) comps.push_back(to_json(v));
  return {{"n", u.n()}, {"components", comps}};
}

GradedClass graded_class_from_json(const Json& j) {
  GradedClass u(j.at("n").get<int>());
  for (const auto& c : j.at("components")) u.add(alt_vector_from_json(c));
  return u;
}

Json to_json(const CoeffGraph& g) {
  Json arcs = Json::array();
  std::vector<std::pair<std::pair<BlockPerm, BlockPerm>, int>> sorted(g.arcs.begin(), g.arcs.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    CanonicalOrder less;
    if (a.first.first != b.first.first) return less(a.first.first, b.first.first);
    return less(a.first.second, b.first.second);
  });
  for (const auto& [arc, w] : sorted)
    arcs.push_back({{"alpha", to_json(arc.first)}, {"x", to_json(arc.second)}, {"weight", w}});
  return {{"index_set", to_json(g.index_set)}, {"arcs", arcs}};
}

}  // namespace permring
