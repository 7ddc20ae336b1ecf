#include "fk/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fk/noncrossing.hpp"
#include "fk/orlik_terao.hpp"

namespace fk {

uint64_t WordSpace::pack(const std::vector<uint8_t>& w) {
  uint64_t key = 0;
  for (uint8_t c : w) key = (key << 8) | (uint64_t{c} + 1);
  return key;
}

std::optional<int> WordSpace::find(const std::vector<uint8_t>& w) const {
  auto it = index.find(pack(w));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

int walk_same_cycle(const std::vector<int>& img, int i, int j) {
  // returns 1 if i and j lie in the same cycle of the permutation
  int x = img[i - 1];
  while (x != i) {
    if (x == j) return 1;
    x = img[x - 1];
  }
  return 0;
}

int distance_of(const std::vector<int>& img) {
  // n minus the number of cycles: minimal transposition count
  int n = static_cast<int>(img.size());
  std::vector<bool> seen(n + 1, false);
  int cycles = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    int x = s;
    while (!seen[x]) {
      seen[x] = true;
      x = img[x - 1];
    }
  }
  return n - cycles;
}

}  // namespace

WordSpace enumerate_words(int n, const Permutation& sigma, int d, const Graph* restrict_to) {
  if (sigma.size() != n) throw std::invalid_argument("enumerate_words: sigma size mismatch");
  if (d < 0 || d > 8) throw limit_error("enumerate_words: degree cap is 8");
  const EdgeTable& tab = EdgeTable::get(n);
  std::vector<int> alphabet;
  if (restrict_to) {
    if (restrict_to->n() != n) throw std::invalid_argument("enumerate_words: graph size mismatch");
    for (const Edge& e : restrict_to->edges()) alphabet.push_back(tab.index(e));
  } else {
    alphabet.resize(tab.m);
    std::iota(alphabet.begin(), alphabet.end(), 0);
  }

  WordSpace ws;
  ws.n = n;
  ws.d = d;
  for (int i = 1; i <= n; ++i) ws.sigma_images.push_back(sigma.apply(i));

  // remaining = prefix^{-1} * sigma; appending letter t maps it to t * remaining.
  std::vector<int> remaining = ws.sigma_images;
  std::vector<uint8_t> word;

  std::function<void(int)> rec = [&](int placed) {
    int dist = distance_of(remaining);
    int left = d - placed;
    if (dist > left || ((left - dist) & 1)) return;
    if (placed == d) {
      ws.index.emplace(WordSpace::pack(word), static_cast<int>(ws.words.size()));
      ws.words.push_back(word);
      if (ws.words.size() > 1000000) throw limit_error("enumerate_words: word cap exceeded");
      return;
    }
    for (int idx : alphabet) {
      const Edge& e = tab.edge_of[idx];
      // left-multiplying by the transposition: swap the values e.u, e.v
      for (int x = 0; x < n; ++x) {
        if (remaining[x] == e.u)
          remaining[x] = e.v;
        else if (remaining[x] == e.v)
          remaining[x] = e.u;
      }
      word.push_back(static_cast<uint8_t>(idx));
      rec(placed + 1);
      word.pop_back();
      for (int x = 0; x < n; ++x) {
        if (remaining[x] == e.u)
          remaining[x] = e.v;
        else if (remaining[x] == e.v)
          remaining[x] = e.u;
      }
    }
  };
  rec(0);
  return ws;
}

namespace {

void row_push(SparseRow& row, int col, int coeff) {
  row.entries.emplace_back(col, Rational(coeff));
}

// sort by column and merge coincident columns exactly
void canonicalize(SparseRow& row) {
  std::sort(row.entries.begin(), row.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> merged;
  for (auto& [col, v] : row.entries) {
    if (!merged.empty() && merged.back().first == col)
      merged.back().second += v;
    else
      merged.emplace_back(col, std::move(v));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& e) { return e.second.is_zero(); }),
               merged.end());
  row.entries = std::move(merged);
}

}  // namespace

std::vector<SparseRow> relation_span(const WordSpace& ws) {
  const EdgeTable& tab = EdgeTable::get(ws.n);
  std::vector<SparseRow> rows;

  auto word_at = [&](const std::vector<uint8_t>& w, int p, int e1, int e2) {
    std::vector<uint8_t> out = w;
    out[p] = static_cast<uint8_t>(e1);
    out[p + 1] = static_cast<uint8_t>(e2);
    return out;
  };

  for (size_t iw = 0; iw < ws.words.size(); ++iw) {
    const auto& w = ws.words[iw];
    for (int p = 0; p + 1 < ws.d; ++p) {
      const Edge a = tab.edge_of[w[p]];
      const Edge b = tab.edge_of[w[p + 1]];
      if (a == b) {
        SparseRow row;
        row_push(row, static_cast<int>(iw), 1);
        rows.push_back(std::move(row));
        continue;
      }
      bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (!share) {
        // commuting swap; emit once per unordered pair of words
        auto swapped = word_at(w, p, w[p + 1], w[p]);
        auto j = ws.find(swapped);
        FK_CHECK(j.has_value(), "relation_span: swapped word missing from space");
        if (static_cast<int>(iw) < *j) {
          SparseRow row;
          row_push(row, static_cast<int>(iw), 1);
          row_push(row, *j, -1);
          canonicalize(row);
          rows.push_back(std::move(row));
        }
        continue;
      }
      // triangle rewrite: with i < j < k the two sign-normalized relations are
      //   x_ij x_jk - x_jk x_ik - x_ik x_ij = 0
      //   x_jk x_ij - x_ik x_jk - x_ij x_ik = 0
      // and each ordered product of distinct triangle edges belongs to
      // exactly one of them. Emit the full row only from the first member.
      std::set<int> verts = {a.u, a.v, b.u, b.v};
      FK_CHECK(verts.size() == 3, "relation_span: expected a shared vertex triple");
      auto vit = verts.begin();
      int i = *vit++;
      int j = *vit++;
      int k = *vit;
      int eij = tab.index(i, j), ejk = tab.index(j, k), eik = tab.index(i, k);
      bool classA = (tab.index(a) == eij && tab.index(b) == ejk);
      bool classB = (tab.index(a) == ejk && tab.index(b) == eij);
      if (!classA && !classB) continue;
      std::vector<std::pair<int, int>> members =
          classA ? std::vector<std::pair<int, int>>{{eij, ejk}, {ejk, eik}, {eik, eij}}
                 : std::vector<std::pair<int, int>>{{ejk, eij}, {eik, ejk}, {eij, eik}};
      SparseRow row;
      int sign = 1;
      for (auto [e1, e2] : members) {
        auto target = word_at(w, p, e1, e2);
        auto jdx = ws.find(target);
        FK_CHECK(jdx.has_value(), "relation_span: homogeneous translate missing from space");
        row_push(row, *jdx, sign);
        sign = -1;
      }
      canonicalize(row);
      rows.push_back(std::move(row));
    }
  }

  // dedupe identical rows, then order by support then entries for the
  // smallest-support-first pivot rule
  for (auto& r : rows) canonicalize(r);
  std::sort(rows.begin(), rows.end(), [](const SparseRow& x, const SparseRow& y) {
    if (x.entries.size() != y.entries.size()) return x.entries.size() < y.entries.size();
    for (size_t t = 0; t < x.entries.size(); ++t) {
      if (x.entries[t].first != y.entries[t].first) return x.entries[t].first < y.entries[t].first;
      int c = Rational::compare(x.entries[t].second, y.entries[t].second);
      if (c != 0) return c < 0;
    }
    return false;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const SparseRow& x, const SparseRow& y) {
                           if (x.entries.size() != y.entries.size()) return false;
                           for (size_t t = 0; t < x.entries.size(); ++t) {
                             if (x.entries[t].first != y.entries[t].first) return false;
                             if (x.entries[t].second != y.entries[t].second) return false;
                           }
                           return true;
                         }),
             rows.end());
  return rows;
}

namespace {

// row := lead_p * row - lead_r * pivot, merging sorted entries; the update
// is fraction-free on integer rows and ends with a content division.
void eliminate(SparseRow& row, const SparseRow& pivot, const Rational& lead_r,
               const Rational& lead_p) {
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(row.entries.size() + pivot.entries.size());
  size_t i = 0, j = 0;
  while (i < row.entries.size() || j < pivot.entries.size()) {
    if (j == pivot.entries.size() ||
        (i < row.entries.size() && row.entries[i].first < pivot.entries[j].first)) {
      merged.emplace_back(row.entries[i].first, row.entries[i].second * lead_p);
      ++i;
    } else if (i == row.entries.size() || pivot.entries[j].first < row.entries[i].first) {
      merged.emplace_back(pivot.entries[j].first, -(pivot.entries[j].second * lead_r));
      ++j;
    } else {
      Rational v = row.entries[i].second * lead_p - pivot.entries[j].second * lead_r;
      if (!v.is_zero()) merged.emplace_back(row.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row.entries = std::move(merged);
}

void normalize_content(SparseRow& row) {
  if (row.entries.empty()) return;
  // fast path: all coefficients inline 64-bit integers
  bool small = true;
  for (const auto& [c, v] : row.entries) {
    FK_CHECK(v.is_integer(), "Echelon: rows must stay integral");
    if (!v.is_small()) {
      small = false;
      break;
    }
  }
  if (small) {
    int64_t g = 0;
    for (const auto& [c, v] : row.entries) {
      g = std::gcd(g, v.small_num());
      if (g == 1) break;
    }
    int lead_sign = row.entries.front().second.sign();
    if (g == 1 && lead_sign > 0) return;
    int64_t divisor = lead_sign < 0 ? -g : g;
    for (auto& [c, v] : row.entries) v = Rational(v.small_num() / divisor);
    return;
  }
  BigInt g(0);
  for (const auto& [c, v] : row.entries) {
    g = BigInt::gcd(g, v.numerator());
    if (g == BigInt(1)) break;
  }
  int lead_sign = row.entries.front().second.sign();
  BigInt divisor = lead_sign < 0 ? -g : g;
  for (auto& [c, v] : row.entries) {
    v = Rational(v.numerator() / divisor, BigInt(1));
  }
}

}  // namespace

bool Echelon::insert(SparseRow row) {
  while (!row.entries.empty()) {
    int lead = row.entries.front().first;
    int pr = pivot_of_col_[lead];
    if (pr < 0) break;
    eliminate(row, rows_[pr], row.entries.front().second, rows_[pr].entries.front().second);
    normalize_content(row);
  }
  if (row.entries.empty()) return false;
  normalize_content(row);
  pivot_of_col_[row.entries.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

void Echelon::rollback(size_t mark) {
  while (rows_.size() > mark) {
    pivot_of_col_[rows_.back().entries.front().first] = -1;
    rows_.pop_back();
  }
}

ComponentOracle::ComponentOracle(int n, const Permutation& sigma, int d)
    : space_(enumerate_words(n, sigma, d, nullptr)),
      ech_(static_cast<int>(space_.words.size())) {
  for (SparseRow& r : relation_span(space_)) ech_.insert(std::move(r));
  relation_rank_ = ech_.rank();
}

long long ComponentOracle::dimension(const Graph& g) const {
  const EdgeTable& tab = EdgeTable::get(space_.n);
  const size_t base_mark = ech_.mark();
  const long long base = ech_.rank();

  uint64_t gmask = tab.mask_of(g.edges());
  long long words_in_g = 0;
  long long added = 0;
  for (size_t iw = 0; iw < space_.words.size(); ++iw) {
    bool inside = true;
    for (uint8_t e : space_.words[iw])
      if (!(gmask & (uint64_t{1} << e))) {
        inside = false;
        break;
      }
    if (!inside) continue;
    ++words_in_g;
    SparseRow unit;
    unit.entries.emplace_back(static_cast<int>(iw), Rational(1));
    if (ech_.insert(std::move(unit))) ++added;
  }
  FK_CHECK(added >= 0 && added <= words_in_g, "oracle: rank monotonicity violated");
  FK_CHECK(ech_.rank() == base + added, "oracle: rank bookkeeping broken");
  ech_.rollback(base_mark);
  return added;
}

long long component_dimension(const Graph& g, const Permutation& sigma) {
  int n = g.n();
  if (sigma.size() != n) throw std::invalid_argument("component_dimension: size mismatch");
  if (sigma.cycle_count() != 1)
    throw std::invalid_argument(
        "component_dimension: sigma must be an n-cycle; split general degrees "
        "with tree_of_simple_monomial first");
  ComponentOracle oracle(n, sigma, n - 1);
  // relation translates are shared across graphs; only the unit rows differ
  const EdgeTable& tab = EdgeTable::get(n);
  uint64_t gmask = tab.mask_of(g.edges());
  uint64_t full = tab.mask_of(Graph::complete(n).edges());
  if (gmask == full)
    return static_cast<long long>(oracle.words().words.size()) - oracle.relation_rank();
  return oracle.dimension(g);
}

long long ab_component_dimension(const Graph& g, int d) {
  int n = g.n();
  if (n > 6) throw limit_error("ab_component_dimension: supported only for n <= 6");
  if (d < 0) throw std::invalid_argument("ab_component_dimension: negative degree");
  const EdgeTable& tab = EdgeTable::get(n);

  // coordinates: d-edge acyclic subsets of g
  std::vector<uint64_t> forests;
  std::unordered_map<uint64_t, int> forest_index;
  const auto& edges = g.edges();
  std::vector<int> pick;
  std::function<void(size_t, uint64_t)> rec = [&](size_t start, uint64_t mask) {
    if (static_cast<int>(pick.size()) == d) {
      forest_index.emplace(mask, static_cast<int>(forests.size()));
      forests.push_back(mask);
      return;
    }
    for (size_t i = start; i < edges.size(); ++i) {
      uint64_t m2 = mask | tab.bit(edges[i]);
      pick.push_back(static_cast<int>(i));
      // quick acyclicity: reuse has_cycle on the small subset
      if (!has_cycle(Graph(n, tab.edges_of(m2)))) rec(i + 1, m2);
      pick.pop_back();
    }
  };
  rec(0, 0);

  // relation rows: monomial multiples of circuit relations landing in degree d
  Echelon ech(static_cast<int>(forests.size()));
  for (const auto& cyc : simple_cycles(g)) {
    OTRelation rel = circuit_relation(n, CircuitDependence::from_cycle(cyc));
    uint64_t cmask = 0;
    for (const auto& [tm, c] : rel.terms) cmask |= tm;
    int r = d - (static_cast<int>(cyc.size()) - 1);
    if (r < 0) continue;
    // choose the multiplier support among edges of g not in the cycle
    std::vector<int> others;
    for (size_t i = 0; i < edges.size(); ++i)
      if (!(cmask & tab.bit(edges[i]))) others.push_back(static_cast<int>(i));
    std::vector<int> comb;
    std::function<void(size_t)> choose = [&](size_t start) {
      if (static_cast<int>(comb.size()) == r) {
        uint64_t rmask = 0;
        for (int i : comb) rmask |= tab.bit(edges[i]);
        SparseRow row;
        for (const auto& [tm, c] : rel.terms) {
          uint64_t full_mask = tm | rmask;
          auto it = forest_index.find(full_mask);
          if (it == forest_index.end()) continue;  // cyclic support vanishes
          row.entries.emplace_back(it->second, Rational(c));
        }
        if (!row.entries.empty()) {
          std::sort(row.entries.begin(), row.entries.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          ech.insert(std::move(row));
        }
        return;
      }
      for (size_t i = start; i < others.size(); ++i) {
        comb.push_back(others[i]);
        choose(i + 1);
        comb.pop_back();
      }
    };
    choose(0);
  }
  return static_cast<long long>(forests.size()) - ech.rank();
}

}  // namespace fk
