#pragma once

#include "permring/coeff_graph.hpp"
#include "permring/cup_ring.hpp"
#include "permring/rewrite.hpp"

#include <json.hpp>

namespace permring {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; integers as JSON numbers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);

/// Permutations travel in the CLI literal form "1,3/2,4".
Json to_json(const BlockPerm& x);
BlockPerm block_perm_from_json(const Json& j);

/// {index_set, terms: [{coeff, perm}]}, terms in CanonicalOrder.
Json to_json(const AltVector& v);
AltVector alt_vector_from_json(const Json& j);

/// {n, components: [{index_set, terms}]}.
Json to_json(const GradedClass& u);
GradedClass graded_class_from_json(const Json& j);

/// {index_set, arcs: [{alpha, x, weight}]}.
Json to_json(const CoeffGraph& g);

}  // namespace permring
