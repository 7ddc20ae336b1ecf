#include "fk/orlik_terao.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fk/prng.hpp"

namespace fk {

void OTElement::add(uint64_t subset_mask, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(subset_mask);
  if (it == terms_.end()) {
    terms_.emplace(subset_mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational OTElement::coeff(const std::vector<Edge>& subset) const {
  uint64_t mask = EdgeTable::get(n_).mask_of(subset);
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

OTElement& OTElement::operator+=(const OTElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("OTElement: vertex count mismatch");
  for (const auto& [mask, c] : o.terms_) add(mask, c);
  return *this;
}

OTElement& OTElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, coeff] : terms_) coeff *= c;
  return *this;
}

std::string OTElement::to_string() const {
  if (terms_.empty()) return "0";
  const EdgeTable& tab = EdgeTable::get(n_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    os << c.to_string() << "*u{";
    bool f2 = true;
    for (const Edge& e : tab.edges_of(mask)) {
      if (!f2) os << ",";
      os << e.u << e.v;
      f2 = false;
    }
    os << "}";
    first = false;
  }
  return os.str();
}

CircuitDependence CircuitDependence::from_cycle(const std::vector<int>& cycle_vertices) {
  if (cycle_vertices.size() < 3)
    throw std::invalid_argument("CircuitDependence: simple graphs have no 2-cycles");
  CircuitDependence dep;
  dep.cycle = cycle_vertices;
  for (size_t p = 0; p < cycle_vertices.size(); ++p) {
    int a = cycle_vertices[p];
    int b = cycle_vertices[(p + 1) % cycle_vertices.size()];
    if (a == b) throw std::invalid_argument("CircuitDependence: repeated vertex");
    dep.coeffs.push_back(a < b ? 1 : -1);
  }
  return dep;
}

bool CircuitDependence::sums_to_zero(int n) const {
  std::vector<int> acc(n + 1, 0);
  for (size_t p = 0; p < cycle.size(); ++p) {
    int a = cycle[p], b = cycle[(p + 1) % cycle.size()];
    Edge e(a, b);
    // c_p * (e_u - e_v) for the stored (u, v) orientation
    acc[e.u] += coeffs[p];
    acc[e.v] -= coeffs[p];
  }
  return std::all_of(acc.begin() + 1, acc.end(), [](int x) { return x == 0; });
}

OTRelation circuit_relation(int n, const CircuitDependence& dep) {
  if (dep.cycle.size() != dep.coeffs.size() || dep.cycle.size() < 3)
    throw std::invalid_argument("circuit_relation: malformed dependence");
  if (!dep.sums_to_zero(n))
    throw std::invalid_argument("circuit_relation: dependence does not sum to zero");
  const EdgeTable& tab = EdgeTable::get(n);
  std::vector<uint64_t> bits;
  uint64_t full = 0;
  for (size_t p = 0; p < dep.cycle.size(); ++p) {
    Edge e(dep.cycle[p], dep.cycle[(p + 1) % dep.cycle.size()]);
    bits.push_back(tab.bit(e));
    full |= bits.back();
  }
  OTRelation rel;
  rel.n = n;
  for (size_t p = 0; p < bits.size(); ++p) rel.terms.emplace_back(full & ~bits[p], dep.coeffs[p]);
  return rel;
}

namespace {

struct BrokenCircuitData {
  uint64_t broken_mask;    // cycle minus its minimal edge
  uint64_t min_edge_bit;   // the removed minimal edge
  int min_pos;             // index of the minimal edge in the relation
  OTRelation relation;
};

// Cycles of g with their broken circuits under the given order, sorted so
// the lexicographically least broken circuit is tried first.
std::vector<BrokenCircuitData> broken_circuit_data(const Graph& g, const EdgeOrder& order) {
  const EdgeTable& tab = EdgeTable::get(g.n());
  std::vector<BrokenCircuitData> out;
  for (const auto& cyc : simple_cycles(g)) {
    CircuitDependence dep = CircuitDependence::from_cycle(cyc);
    OTRelation rel = circuit_relation(g.n(), dep);
    std::vector<Edge> ce;
    for (size_t p = 0; p < cyc.size(); ++p) ce.emplace_back(cyc[p], cyc[(p + 1) % cyc.size()]);
    int min_pos = 0;
    for (size_t p = 1; p < ce.size(); ++p)
      if (order.less(ce[p], ce[min_pos])) min_pos = static_cast<int>(p);
    BrokenCircuitData d;
    d.min_edge_bit = tab.bit(ce[min_pos]);
    d.min_pos = min_pos;
    d.broken_mask = 0;
    for (size_t p = 0; p < ce.size(); ++p)
      if (static_cast<int>(p) != min_pos) d.broken_mask |= tab.bit(ce[p]);
    d.relation = std::move(rel);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const BrokenCircuitData& a, const BrokenCircuitData& b) {
    return mask_lex_less(a.broken_mask, b.broken_mask);
  });
  return out;
}

bool mask_has_cycle(const EdgeTable& tab, uint64_t mask, int n) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (mask) {
    int idx = __builtin_ctzll(mask);
    mask &= mask - 1;
    int a = find(tab.edge_of[idx].u), b = find(tab.edge_of[idx].v);
    if (a == b) return true;
    parent[b] = a;
  }
  return false;
}

// Count of edges in the descending edge order below which every set
// comparison happens; used for the per-step termination assertion.
uint64_t order_weight(const EdgeOrder& order, const EdgeTable& tab, uint64_t mask) {
  uint64_t w = 0;
  while (mask) {
    int idx = __builtin_ctzll(mask);
    mask &= mask - 1;
    w += uint64_t{1} << order.rank(tab.edge_of[idx]);
  }
  return w;
}

OTElement reduce_masks(int n, const std::map<uint64_t, Rational, MaskLexLess>& input,
                       const Graph& g, const EdgeOrder& order, OTStrategy strategy) {
  const EdgeTable& tab = EdgeTable::get(n);
  auto bcs = broken_circuit_data(g, order);
  std::optional<Prng> rng;
  if (strategy.kind == OTStrategy::Kind::Random) rng.emplace(strategy.seed);

  OTElement result(n);
  std::map<uint64_t, Rational, MaskLexLess> pending;
  for (const auto& [mask, c] : input) {
    if (mask_has_cycle(tab, mask, n)) continue;
    auto it = pending.find(mask);
    if (it == pending.end())
      pending.emplace(mask, c);
    else {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  }

  while (!pending.empty()) {
    auto it = pending.begin();
    uint64_t mask = it->first;
    Rational coeff = it->second;

    std::vector<const BrokenCircuitData*> hits;
    for (const auto& d : bcs) {
      if ((mask & d.broken_mask) == d.broken_mask) {
        hits.push_back(&d);
        if (strategy.kind == OTStrategy::Kind::LexFirst) break;
      }
    }
    if (hits.empty()) {
      result.add(mask, coeff);
      pending.erase(it);
      continue;
    }
    const BrokenCircuitData& d = strategy.kind == OTStrategy::Kind::LexFirst
                                     ? *hits.front()
                                     : *hits[rng->below(hits.size())];
    pending.erase(it);

    // substitute: the relation term at min_pos is the broken-circuit
    // product; solve for it and splice in the rest of the monomial
    uint64_t rest = mask & ~d.broken_mask;
    int cmin = d.relation.terms[d.min_pos].second;
    uint64_t before = order_weight(order, tab, mask);
    for (size_t p = 0; p < d.relation.terms.size(); ++p) {
      if (static_cast<int>(p) == d.min_pos) continue;
      auto [term_mask, cp] = d.relation.terms[p];
      uint64_t subst = term_mask | rest;
      if (term_mask & rest) continue;           // repeated variable
      if (mask_has_cycle(tab, subst, n)) continue;  // cyclic support
      // each substitute swaps one circuit edge for the strictly smaller
      // minimal edge, so the edge multiset strictly decreases in the order
      FK_CHECK(order_weight(order, tab, subst) < before,
               "reduce_monomial: substitution must decrease the edge order");
      Rational c2 = coeff * Rational(-cp, cmin);
      auto jt = pending.find(subst);
      if (jt == pending.end())
        pending.emplace(subst, c2);
      else {
        jt->second += c2;
        if (jt->second.is_zero()) pending.erase(jt);
      }
    }
  }
  return result;
}

uint64_t graph_mask_of(const Graph& g) { return EdgeTable::get(g.n()).mask_of(g.edges()); }

}  // namespace

OTElement reduce_monomial(const std::vector<Edge>& subset, const Graph& g,
                          const EdgeOrder& order, OTStrategy strategy) {
  const EdgeTable& tab = EdgeTable::get(g.n());
  // a repeated edge kills the monomial outright
  std::vector<Edge> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return OTElement(g.n());
  uint64_t mask = tab.mask_of(sorted);
  if (mask & ~graph_mask_of(g))
    throw std::invalid_argument("reduce_monomial: subset not inside g");
  std::map<uint64_t, Rational, MaskLexLess> input;
  input.emplace(mask, Rational(1));
  return reduce_masks(g.n(), input, g, order, strategy);
}

OTElement multiply(const OTElement& a, const OTElement& b, const Graph& g) {
  if (a.n() != g.n() || b.n() != g.n())
    throw std::invalid_argument("multiply: vertex count mismatch");
  uint64_t gmask = graph_mask_of(g);
  std::map<uint64_t, Rational, MaskLexLess> products;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;  // repeated variable
      uint64_t m = ma | mb;
      if (m & ~gmask) throw std::invalid_argument("multiply: term not inside g");
      Rational c = ca * cb;
      auto it = products.find(m);
      if (it == products.end())
        products.emplace(m, std::move(c));
      else {
        it->second += c;
        if (it->second.is_zero()) products.erase(it);
      }
    }
  }
  return reduce_masks(g.n(), products, g, EdgeOrder::lex(g), OTStrategy::lex());
}

void enumerate_nbc(const Graph& g, const EdgeOrder& order,
                   const std::function<bool(const std::vector<Edge>&)>& visit) {
  if (g.n() > 10) throw limit_error("nbc enumeration: supported only for n <= 10");
  const EdgeTable& tab = EdgeTable::get(g.n());
  std::vector<uint64_t> broken;
  for (const auto& d : broken_circuit_data(g, order)) broken.push_back(d.broken_mask);
  const auto& edges = g.edges();
  bool go = true;
  // NBC sets are downward closed, so extend by larger edges only while no
  // broken circuit is completed.
  std::function<void(size_t, uint64_t, std::vector<Edge>&)> rec =
      [&](size_t start, uint64_t mask, std::vector<Edge>& acc) {
        if (!go) return;
        go = visit(acc);
        if (!go) return;
        for (size_t i = start; i < edges.size(); ++i) {
          uint64_t next = mask | tab.bit(edges[i]);
          bool bad = false;
          for (uint64_t b : broken)
            if ((next & b) == b) {
              bad = true;
              break;
            }
          if (bad) continue;
          acc.push_back(edges[i]);
          rec(i + 1, next, acc);
          acc.pop_back();
          if (!go) return;
        }
      };
  std::vector<Edge> acc;
  rec(0, 0, acc);
}

std::vector<std::vector<Edge>> nbc_basis(const Graph& g, const EdgeOrder& order) {
  std::vector<std::vector<Edge>> out;
  enumerate_nbc(g, order, [&](const std::vector<Edge>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<long long> nbc_counts_by_size(const Graph& g, const EdgeOrder& order) {
  std::vector<long long> counts;
  enumerate_nbc(g, order, [&](const std::vector<Edge>& s) {
    if (s.size() >= counts.size()) counts.resize(s.size() + 1, 0);
    ++counts[s.size()];
    return true;
  });
  return counts;
}

OTElement abelianize(const TreeElement& e, const Graph& g) {
  if (e.n() != g.n()) throw std::invalid_argument("abelianize: vertex count mismatch");
  std::map<uint64_t, Rational, MaskLexLess> input;
  for (const auto& [mask, c] : e.terms()) {
    auto it = input.find(mask);
    if (it == input.end())
      input.emplace(mask, c);
    else
      it->second += c;
  }
  return reduce_masks(g.n(), input, g, EdgeOrder::lex(g), OTStrategy::lex());
}

OTElement abelianize(const Monomial& p, const Graph& g) {
  if (p.n != g.n()) throw std::invalid_argument("abelianize: vertex count mismatch");
  std::vector<Edge> seen;
  for (const Edge& e : p.word) {
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) return OTElement(g.n());
    seen.push_back(e);
  }
  OTElement out = reduce_monomial(seen, g, EdgeOrder::lex(g));
  out *= Rational(p.sign);
  return out;
}

Polynomial ot_hilbert_series(const Graph& g) {
  auto counts = nbc_counts_by_size(g, EdgeOrder::lex(g));
  std::vector<Rational> coeffs;
  for (long long c : counts) coeffs.emplace_back(c);
  Polynomial from_nbc(std::move(coeffs));
  Polynomial from_chi = hilbert_from_chromatic(chromatic_polynomial(g), g.n());
  if (!(from_nbc == from_chi))
    throw std::logic_error("ot_hilbert_series: NBC counts disagree with the chromatic transform");
  return from_nbc;
}

}  // namespace fk
