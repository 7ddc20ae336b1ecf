#include "fk/json_io.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace fk {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON");
  return j;
}

int get_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw parse_error("expected an object with an integer field \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw parse_error("\"n\" must be positive");
  return n;
}

std::pair<int, int> get_pair(const json& item) {
  if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
      !item[1].is_number_integer())
    throw parse_error("expected a pair [i, j]");
  return {item[0].get<int>(), item[1].get<int>()};
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::string dump(const ordered_json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

Graph graph_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_n(j);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw parse_error("expected an array field \"edges\"");
  std::vector<Edge> edges;
  for (const auto& item : j["edges"]) {
    auto [a, b] = get_pair(item);
    if (a >= b) throw parse_error("graph edges require i < j");
    if (a < 1 || b > n) throw parse_error("edge endpoint out of range");
    edges.emplace_back(a, b);
  }
  std::vector<Edge> check = edges;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw parse_error("duplicate edge");
  return Graph(n, std::move(edges));
}

std::string graph_to_json(const Graph& g, bool pretty) {
  ordered_json j;
  j["n"] = g.n();
  j["edges"] = edges_json(g.edges());
  return dump(j, pretty);
}

Monomial monomial_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_n(j);
  if (!j.contains("word") || !j["word"].is_array())
    throw parse_error("expected an array field \"word\"");
  std::vector<std::pair<int, int>> letters;
  for (const auto& item : j["word"]) letters.push_back(get_pair(item));
  int sign = 1;
  if (j.contains("sign")) {
    if (!j["sign"].is_number_integer() || (j["sign"] != 1 && j["sign"] != -1))
      throw parse_error("\"sign\" must be 1 or -1");
    sign = j["sign"].get<int>();
  }
  try {
    Monomial p(n, std::move(letters));
    p.sign *= sign;
    return p;
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string monomial_to_json(const Monomial& p, bool pretty) {
  ordered_json j;
  j["n"] = p.n;
  j["word"] = edges_json(p.word);
  j["sign"] = p.sign;
  return dump(j, pretty);
}

namespace {

// shared layout for tree elements and Orlik-Terao elements
template <typename Element>
Element terms_from_json(const std::string& text, const char* key,
                        const std::function<void(Element&, int, std::vector<Edge>, Rational)>& add) {
  json j = parse_or_throw(text);
  int n = get_n(j);
  if (!j.contains(key) || !j[key].is_array())
    throw parse_error(std::string("expected an array field \"") + key + "\"");
  Element out(n);
  for (const auto& item : j[key]) {
    if (!item.is_object() || !item.contains("coeff") || !item.contains("edges"))
      throw parse_error("each term needs \"coeff\" and \"edges\"");
    if (!item["coeff"].is_string()) throw parse_error("coefficients must be exact strings");
    Rational c;
    try {
      c = Rational::from_string(item["coeff"].get<std::string>());
    } catch (const std::exception&) {
      throw parse_error("bad coefficient string");
    }
    std::vector<Edge> edges;
    for (const auto& pair : item["edges"]) {
      auto [a, b] = get_pair(pair);
      if (a >= b) throw parse_error("term edges require i < j");
      if (a < 1 || b > n) throw parse_error("edge endpoint out of range");
      edges.emplace_back(a, b);
    }
    add(out, n, std::move(edges), std::move(c));
  }
  return out;
}

template <typename Element>
std::string terms_to_json(const Element& e, const char* key, bool pretty) {
  const EdgeTable& tab = EdgeTable::get(e.n());
  ordered_json j;
  j["n"] = e.n();
  ordered_json arr = ordered_json::array();
  for (const auto& [mask, c] : e.terms()) {
    ordered_json term;
    term["coeff"] = c.to_string();
    term["edges"] = edges_json(tab.edges_of(mask));
    arr.push_back(std::move(term));
  }
  j[key] = std::move(arr);
  return dump(j, pretty);
}

}  // namespace

TreeElement element_from_json(const std::string& text) {
  return terms_from_json<TreeElement>(
      text, "terms", [](TreeElement& out, int n, std::vector<Edge> edges, Rational c) {
        try {
          NoncrossingTree t(n, std::move(edges));
          out.add(t, c);
        } catch (const std::invalid_argument& e) {
          throw parse_error(e.what());
        }
      });
}

std::string element_to_json(const TreeElement& e, bool pretty) {
  return terms_to_json(e, "terms", pretty);
}

OTElement ot_element_from_json(const std::string& text) {
  return terms_from_json<OTElement>(
      text, "ot_terms", [](OTElement& out, int n, std::vector<Edge> edges, Rational c) {
        const EdgeTable& tab = EdgeTable::get(n);
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
          throw parse_error("duplicate edge in term");
        out.add(tab.mask_of(edges), c);
      });
}

std::string ot_element_to_json(const OTElement& e, bool pretty) {
  return terms_to_json(e, "ot_terms", pretty);
}

std::string tree_to_json(const NoncrossingTree& t, bool with_signature) {
  ordered_json j;
  j["edges"] = edges_json(t.edges());
  if (with_signature) {
    ordered_json sig = ordered_json::array();
    for (int s : tree_signature(t).s) sig.push_back(s);
    j["signature"] = sig;
  }
  return j.dump();
}

}  // namespace fk
