#ifndef FK_JSON_IO_HPP
#define FK_JSON_IO_HPP

#include <string>

#include "fk/graphs.hpp"
#include "fk/noncrossing.hpp"
#include "fk/orlik_terao.hpp"
#include "fk/rewrite.hpp"
#include "fk/words.hpp"

namespace fk {

/// Graph JSON: {"n": <int>, "edges": [[i, j], ...]} with 1 <= i < j <= n.
/// Rejects i >= j, duplicates, and out-of-range endpoints.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g, bool pretty = false);

/// Monomial JSON: {"n": <int>, "word": [[i, j], ...], "sign": <+-1>}.
/// Input pairs may be unordered (normalized with a sign flip); output
/// pairs always have i < j. Sign defaults to +1 on input.
Monomial monomial_from_json(const std::string& text);
std::string monomial_to_json(const Monomial& p, bool pretty = false);

/// Element JSON: {"n": <int>, "terms": [{"coeff": "<int or p/q>",
/// "edges": [[i, j], ...]}, ...]}, terms sorted by lexicographic edge set,
/// coefficients as exact strings.
TreeElement element_from_json(const std::string& text);
std::string element_to_json(const TreeElement& e, bool pretty = false);

/// Same layout with key "ot_terms" for Orlik-Terao elements.
OTElement ot_element_from_json(const std::string& text);
std::string ot_element_to_json(const OTElement& e, bool pretty = false);

/// One tree as {"edges": [...]} or {"edges": [...], "signature": [...]}.
std::string tree_to_json(const NoncrossingTree& t, bool with_signature);

}  // namespace fk

#endif
