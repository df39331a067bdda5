#include "qtl/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <tuple>

namespace qtl {

// ------------------------------------------------------------ matching pool

namespace {

struct Pool {
  std::deque<TLTangle> items;  // references stay valid across push_back
  std::map<TLTangle, int> ids;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

int matching_id(const TLTangle& t) {
  if (t.m() != 0) throw ValenceMismatch("matching_id: expected a (0,2k) matching, got " + t.str());
  Pool& p = pool();
  auto [it, inserted] = p.ids.try_emplace(t, static_cast<int>(p.items.size()));
  if (inserted) p.items.push_back(t);
  return it->second;
}

const TLTangle& matching(int id) { return pool().items.at(static_cast<std::size_t>(id)); }

// ------------------------------------------------------------ circle graphs

namespace {

/// Disjoint circles on labelled vertices; components numbered by smallest vertex.
struct CircleGraph {
  int nv = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> comp;
  int ncomp = 0;

  explicit CircleGraph(int n) : nv(n) {}

  int add_edge(int a, int b) {
    edges.emplace_back(a, b);
    return static_cast<int>(edges.size()) - 1;
  }

  void components() {
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    comp.assign(static_cast<std::size_t>(nv), -1);
    std::vector<int> root_id(static_cast<std::size_t>(nv), -1);
    ncomp = 0;
    for (int v = 0; v < nv; ++v) {
      int r = find(v);
      if (root_id[r] < 0) root_id[r] = ncomp++;
      comp[v] = root_id[r];
    }
  }
};

using State = std::map<Labeling, mpq_class>;

bool bit(Labeling l, int c) { return (l >> c) & 1U; }

/// Replaces edges e1 = (a,b), e2 = (c,d) by (a,c), (b,d) and applies the
/// merge or split map of Z[x]/(x^2) to the labels.
void saddle(CircleGraph& g, State& st, int e1, int e2) {
  const std::vector<int> old = g.comp;
  const int oldn = g.ncomp;
  std::vector<int> rep(static_cast<std::size_t>(oldn), -1);
  for (int v = g.nv - 1; v >= 0; --v) rep[old[v]] = v;
  auto [a, b] = g.edges[e1];
  auto [c, d] = g.edges[e2];
  const int ca = old[a], cc = old[c];
  g.edges[e1] = {a, c};
  g.edges[e2] = {b, d};
  g.components();
  std::vector<int> to_new(static_cast<std::size_t>(oldn));
  for (int o = 0; o < oldn; ++o) to_new[o] = g.comp[rep[o]];
  State next;
  auto put = [&](Labeling l, const mpq_class& v) {
    auto [it, ins] = next.try_emplace(l, v);
    if (!ins) {
      it->second += v;
      if (it->second == 0) next.erase(it);
    }
  };
  auto carry = [&](Labeling l, int skip1, int skip2) {
    Labeling out = 0;
    for (int o = 0; o < oldn; ++o)
      if (o != skip1 && o != skip2 && bit(l, o)) out |= Labeling{1} << to_new[o];
    return out;
  };
  if (ca != cc) {
    const int n = g.comp[a];
    for (const auto& [l, v] : st) {
      bool xa = bit(l, ca), xc = bit(l, cc);
      if (xa && xc) continue;
      Labeling out = carry(l, ca, cc);
      if (xa || xc) out |= Labeling{1} << n;
      put(out, v);
    }
  } else {
    const int n1 = g.comp[a], n2 = g.comp[b];
    if (n1 == n2) throw InvariantViolation("saddle produced a non-orientable band");
    for (const auto& [l, v] : st) {
      Labeling base = carry(l, ca, -1);
      if (bit(l, ca)) {
        put(base | (Labeling{1} << n1) | (Labeling{1} << n2), v);
      } else {
        put(base | (Labeling{1} << n1), v);
        put(base | (Labeling{1} << n2), v);
      }
    }
  }
  st = std::move(next);
}

/// Adds the arcs of a (0,c) matching on vertices offset..offset+c-1; returns
/// the edge index of the arc starting at each left endpoint (-1 elsewhere).
std::vector<int> add_matching(CircleGraph& g, const TLTangle& t, int offset) {
  const int c = t.n();
  std::vector<int> idx(static_cast<std::size_t>(c), -1);
  for (int j = 0; j < c; ++j) {
    int p = t.partner()[j];
    if (j < p) idx[j] = g.add_edge(offset + j, offset + p);
  }
  return idx;
}

Labeling to_components(const CircleGraph& g, const HomCircles& hc, Labeling l, int offset) {
  Labeling out = 0;
  const int c = static_cast<int>(hc.circle_of_point.size());
  for (int j = 0; j < c; ++j)
    if (bit(l, hc.circle_of_point[j])) out |= Labeling{1} << g.comp[offset + j];
  return out;
}

TLTangle cap_of(const TLTangle& a, int i, int* circles) {
  Composite r = compose(a, TLTangle::cap(a.n(), i));
  if (circles) *circles = r.circles;
  return r.tangle;
}

TLTangle cup_of(const TLTangle& a, int i) { return compose(a, TLTangle::cup(a.n(), i)).tangle; }

}  // namespace

const HomCircles& hom_circles(int alpha, int beta) {
  static std::map<std::pair<int, int>, HomCircles> cache;
  auto key = std::make_pair(alpha, beta);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const TLTangle& a = matching(alpha);
  const TLTangle& b = matching(beta);
  if (a.n() != b.n()) throw ValenceMismatch("hom_circles: matchings of different size");
  const int c = a.n();
  CircleGraph g(2 * c);
  add_matching(g, a, 0);
  add_matching(g, b, c);
  for (int j = 0; j < c; ++j) g.add_edge(j, c + j);
  g.components();
  HomCircles hc;
  // components are numbered by smallest vertex, so a-vertices (0..c-1)
  // number them by smallest middle point
  hc.count = g.ncomp;
  hc.circle_of_point.resize(static_cast<std::size_t>(c));
  hc.arcs.assign(static_cast<std::size_t>(g.ncomp), 0);
  for (int j = 0; j < c; ++j) {
    hc.circle_of_point[j] = g.comp[j];
    if (j < a.partner()[j]) ++hc.arcs[g.comp[j]];
  }
  return cache.emplace(key, std::move(hc)).first->second;
}

void add_to(Morphism& f, Labeling l, const mpq_class& c) {
  if (c == 0) return;
  auto [it, ins] = f.try_emplace(l, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

Morphism scaled(const Morphism& f, const mpq_class& c) {
  Morphism out;
  if (c == 0) return out;
  for (const auto& [l, v] : f) out.emplace(l, v * c);
  return out;
}

int generator_degree(int alpha, int beta, Labeling l) {
  const HomCircles& hc = hom_circles(alpha, beta);
  const int k = static_cast<int>(hc.circle_of_point.size()) / 2;
  const int xs = std::popcount(l);
  return k - (hc.count - xs) + xs;
}

std::string CobGenerator::str() const {
  std::string s = matching(source).str() + " -> " + matching(target).str() + " [";
  const int c = hom_circles(source, target).count;
  for (int i = 0; i < c; ++i) s += (labels >> i) & 1U ? 'x' : '1';
  return s + "]";
}

namespace {

const Morphism& compose_generators(int alpha, int beta, int gamma, Labeling lf, Labeling lg) {
  using Key = std::tuple<int, int, int, Labeling, Labeling>;
  static std::map<Key, Morphism> cache;
  Key key{alpha, beta, gamma, lf, lg};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const TLTangle& a = matching(alpha);
  const TLTangle& b = matching(beta);
  const TLTangle& g = matching(gamma);
  const int c = a.n();
  if (b.n() != c || g.n() != c) throw MiddleMismatch("compose: matchings of different size");
  CircleGraph gr(4 * c);
  add_matching(gr, a, 0);
  std::vector<int> ub = add_matching(gr, b, c);
  for (int j = 0; j < c; ++j) gr.add_edge(j, c + j);
  std::vector<int> vb = add_matching(gr, b, 2 * c);
  add_matching(gr, g, 3 * c);
  for (int j = 0; j < c; ++j) gr.add_edge(2 * c + j, 3 * c + j);
  gr.components();
  State st;
  st[to_components(gr, hom_circles(alpha, beta), lf, 0) | to_components(gr, hom_circles(beta, gamma), lg, 2 * c)] = 1;
  for (int p = 0; p < c; ++p)
    if (ub[p] >= 0) saddle(gr, st, ub[p], vb[p]);
  const HomCircles& out = hom_circles(alpha, gamma);
  Morphism res;
  for (const auto& [l, v] : st) {
    Labeling r = 0;
    for (int j = 0; j < c; ++j)
      if (bit(l, gr.comp[j])) r |= Labeling{1} << out.circle_of_point[j];
    add_to(res, r, v);
  }
  return cache.emplace(key, std::move(res)).first->second;
}

}  // namespace

Morphism compose(int alpha, int beta, int gamma, const Morphism& f, const Morphism& g) {
  Morphism out;
  for (const auto& [lf, cf] : f)
    for (const auto& [lg, cg] : g) {
      const Morphism& r = compose_generators(alpha, beta, gamma, lf, lg);
      for (const auto& [l, v] : r) add_to(out, l, v * cf * cg);
    }
  return out;
}

std::vector<std::pair<CobGenerator, mpq_class>> frobenius_compose(const CobGenerator& f, const CobGenerator& g) {
  if (f.target != g.source)
    throw MiddleMismatch("frobenius_compose: " + matching(f.target).str() + " vs " + matching(g.source).str());
  std::vector<std::pair<CobGenerator, mpq_class>> out;
  for (const auto& [l, v] : compose_generators(f.source, f.target, g.target, f.labels, g.labels))
    out.emplace_back(CobGenerator{f.source, g.target, l}, v);
  return out;
}

CobGenerator reverse(const CobGenerator& g) {
  const HomCircles& fwd = hom_circles(g.source, g.target);
  const HomCircles& back = hom_circles(g.target, g.source);
  Labeling l = 0;
  for (std::size_t j = 0; j < fwd.circle_of_point.size(); ++j)
    if (bit(g.labels, fwd.circle_of_point[j])) l |= Labeling{1} << back.circle_of_point[j];
  return {g.target, g.source, l};
}

// ------------------------------------------------------------ band moves

const CapResult& cap_morphism(int alpha, int beta, int i, Labeling f) {
  using Key = std::tuple<int, int, int, Labeling>;
  static std::map<Key, CapResult> cache;
  Key key{alpha, beta, i, f};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const TLTangle& a = matching(alpha);
  const TLTangle& b = matching(beta);
  const int c = a.n();
  if (i < 0 || i + 1 >= c) throw MalformedDiagram("cap position out of range");
  CapResult r;
  int ca = 0, cb = 0;
  r.source = matching_id(cap_of(a, i, &ca));
  r.target = matching_id(cap_of(b, i, &cb));
  r.source_circle = ca > 0;
  r.target_circle = cb > 0;
  CircleGraph g(2 * c);
  add_matching(g, a, 0);
  add_matching(g, b, c);
  std::vector<int> vert(static_cast<std::size_t>(c));
  for (int j = 0; j < c; ++j) vert[j] = g.add_edge(j, c + j);
  g.components();
  State st;
  st[to_components(g, hom_circles(alpha, beta), f, 0)] = 1;
  saddle(g, st, vert[i], vert[i + 1]);
  const HomCircles& out = hom_circles(r.source, r.target);
  // classify components after the band
  std::vector<int> target_circle(static_cast<std::size_t>(g.ncomp), -1);  // >=0 closure circle, -2 O_a, -3 O_b
  for (int j = 0; j < c; ++j) {
    if (j == i || j == i + 1) continue;
    int jj = j < i ? j : j - 2;
    target_circle[g.comp[j]] = out.circle_of_point[jj];
  }
  for (int k = 0; k < g.ncomp; ++k)
    if (target_circle[k] == -1) target_circle[k] = g.comp[i] == k ? -2 : -3;
  for (const auto& [l, v] : st) {
    BandTerm t;
    t.coeff = v;
    t.a = r.source_circle ? 0 : -1;
    t.b = r.target_circle ? 0 : -1;
    for (int k = 0; k < g.ncomp; ++k) {
      if (!bit(l, k)) continue;
      if (target_circle[k] >= 0)
        t.labels |= Labeling{1} << target_circle[k];
      else if (target_circle[k] == -2)
        t.a = 1;
      else
        t.b = 1;
    }
    r.terms.push_back(t);
  }
  return cache.emplace(key, std::move(r)).first->second;
}

const SaddleResult& saddle_morphism(int alpha, int i, bool pos) {
  using Key = std::tuple<int, int, bool>;
  static std::map<Key, SaddleResult> cache;
  Key key{alpha, i, pos};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const TLTangle& a = matching(alpha);
  const int c = a.n();
  if (i < 0 || i + 1 >= c) throw MalformedDiagram("crossing position out of range");
  SaddleResult r;
  r.other = matching_id(cup_of(cap_of(a, i, nullptr), i));
  r.circle = a.partner()[i] == i + 1;
  CircleGraph g(2 * c);
  add_matching(g, a, 0);
  add_matching(g, a, c);
  std::vector<int> vert(static_cast<std::size_t>(c));
  for (int j = 0; j < c; ++j) vert[j] = g.add_edge(j, c + j);
  g.components();
  State st;
  st[0] = 1;
  saddle(g, st, vert[i], vert[i + 1]);
  // pos: circles of closure(alpha, other) are read on the a side; neg: on the b side
  const HomCircles& out = pos ? hom_circles(alpha, r.other) : hom_circles(r.other, alpha);
  const int side = pos ? 0 : c;
  std::vector<int> circle(static_cast<std::size_t>(g.ncomp), -1);
  for (int j = 0; j < c; ++j) circle[g.comp[side + j]] = out.circle_of_point[j];
  for (const auto& [l, v] : st) {
    BandTerm t;
    t.coeff = v;
    int& free_label = pos ? t.b : t.a;
    if (r.circle) free_label = 0;
    for (int k = 0; k < g.ncomp; ++k) {
      if (!bit(l, k)) continue;
      if (circle[k] >= 0)
        t.labels |= Labeling{1} << circle[k];
      else
        free_label = 1;
    }
    r.terms.push_back(t);
  }
  return cache.emplace(key, std::move(r)).first->second;
}

Labeling cup_labels(int alpha, int beta, int i, Labeling f) {
  using Key = std::tuple<int, int, int>;
  static std::map<Key, std::vector<int>> cache;
  Key key{alpha, beta, i};
  auto it = cache.find(key);
  if (it == cache.end()) {
    const HomCircles& before = hom_circles(alpha, beta);
    int a2 = matching_id(cup_of(matching(alpha), i));
    int b2 = matching_id(cup_of(matching(beta), i));
    const HomCircles& after = hom_circles(a2, b2);
    std::vector<int> m(static_cast<std::size_t>(before.count), -1);
    for (std::size_t j = 0; j < before.circle_of_point.size(); ++j) {
      int jj = static_cast<int>(j) < i ? static_cast<int>(j) : static_cast<int>(j) + 2;
      m[before.circle_of_point[j]] = after.circle_of_point[jj];
    }
    it = cache.emplace(key, std::move(m)).first;
  }
  Labeling out = 0;
  for (std::size_t c = 0; c < it->second.size(); ++c)
    if (bit(f, static_cast<int>(c))) out |= Labeling{1} << it->second[c];
  return out;
}

// ------------------------------------------------------------ arc algebra

HAlgebra h_algebra(int n) {
  if (n < 0) throw Error("h_algebra: negative n");
  HAlgebra h;
  h.n = n;
  for (const auto& t : enumerate_matchings(n)) h.matchings.push_back(matching_id(t));
  for (int a : h.matchings)
    for (int b : h.matchings) {
      const int c = hom_circles(a, b).count;
      for (Labeling l = 0; l < (Labeling{1} << c); ++l) {
        CobGenerator g{a, b, l};
        h.index.emplace(g, static_cast<int>(h.basis.size()));
        h.basis.push_back(g);
        ++h.graded_dim[g.degree()];
      }
    }
  return h;
}

std::vector<std::pair<int, mpq_class>> HAlgebra::multiply(int a, int b) const {
  const CobGenerator& ga = basis.at(static_cast<std::size_t>(a));
  const CobGenerator& gb = basis.at(static_cast<std::size_t>(b));
  std::vector<std::pair<int, mpq_class>> out;
  if (gb.target != ga.source) return out;
  for (const auto& [g, v] : frobenius_compose(gb, ga)) out.emplace_back(index.at(g), v);
  return out;
}

}  // namespace qtl
