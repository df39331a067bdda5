#include "qtl/cube_oracle.hpp"

#include <bit>
#include <numeric>

#include "qtl/linalg.hpp"

namespace qtl {

namespace {

struct Crossing {
  int bl, br, tl, tr;
  bool positive;
};

struct Arcs {
  int nodes = 0;
  std::vector<std::pair<int, int>> joins;
  std::vector<Crossing> crossings;
};

Arcs arcs_of(const TangleDiagram& d) {
  Arcs a;
  std::vector<int> cur;
  for (const Slice& s : d.slices()) {
    const auto at = cur.begin() + s.pos;
    switch (s.kind) {
      case SliceKind::cup: {
        int n = a.nodes++;
        cur.insert(at, {n, n});
        break;
      }
      case SliceKind::cap:
        a.joins.emplace_back(cur[s.pos], cur[s.pos + 1]);
        cur.erase(at, at + 2);
        break;
      case SliceKind::pos:
      case SliceKind::neg: {
        Crossing c{cur[s.pos], cur[s.pos + 1], a.nodes, a.nodes + 1, s.kind == SliceKind::pos};
        a.nodes += 2;
        cur[s.pos] = c.tl;
        cur[s.pos + 1] = c.tr;
        a.crossings.push_back(c);
        break;
      }
    }
  }
  return a;
}

struct Resolution {
  std::vector<int> circle_of_node;
  int circles = 0;
};

Resolution resolve(const Arcs& a, unsigned r) {
  std::vector<int> parent(static_cast<std::size_t>(a.nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int x, int y) { parent[find(x)] = find(y); };
  for (auto [x, y] : a.joins) join(x, y);
  for (std::size_t j = 0; j < a.crossings.size(); ++j) {
    const Crossing& c = a.crossings[j];
    bool one = (r >> j) & 1u;
    // the 0-smoothing is the identity for pos crossings, the turnback for neg
    if (one != c.positive) {
      join(c.bl, c.tl);
      join(c.br, c.tr);
    } else {
      join(c.bl, c.br);
      join(c.tl, c.tr);
    }
  }
  Resolution res;
  res.circle_of_node.assign(static_cast<std::size_t>(a.nodes), -1);
  std::vector<int> id(static_cast<std::size_t>(a.nodes), -1);
  for (int v = 0; v < a.nodes; ++v) {
    int root = find(v);
    if (id[root] < 0) id[root] = res.circles++;
    res.circle_of_node[v] = id[root];
  }
  return res;
}

}  // namespace

BettiTable cube_oracle(const TangleDiagram& d) {
  if (d.bottom() != 0 || d.top() != 0) throw MalformedDiagram("cube_oracle needs a closed diagram");
  const Arcs a = arcs_of(d);
  const int c = static_cast<int>(a.crossings.size());
  if (c > kCubeCeiling) throw TooLarge("cube of resolutions limited to " + std::to_string(kCubeCeiling) + " crossings");
  const unsigned verts = 1u << c;
  std::vector<Resolution> res;
  res.reserve(verts);
  for (unsigned r = 0; r < verts; ++r) res.push_back(resolve(a, r));

  auto h2_of = [&](unsigned r) { return 2 * std::popcount(r) - c; };
  auto q2_of = [&](unsigned r, unsigned l) {
    int k = res[r].circles, xs = std::popcount(l);
    return c - 2 * std::popcount(r) - 2 * (k - xs) + 2 * xs;
  };

  // index of every generator inside its (h2, q2) block
  std::map<std::pair<int, int>, int> block_size;
  std::vector<std::vector<int>> index(verts);
  for (unsigned r = 0; r < verts; ++r) {
    unsigned gens = 1u << res[r].circles;
    index[r].resize(gens);
    for (unsigned l = 0; l < gens; ++l) index[r][l] = block_size[{h2_of(r), q2_of(r, l)}]++;
  }

  std::map<std::pair<int, int>, std::vector<SparseRow>> rows;
  for (unsigned r = 0; r < verts; ++r) {
    const Resolution& src = res[r];
    for (unsigned l = 0; l < (1u << src.circles); ++l) {
      std::map<int, mpz_class> row;
      for (int j = 0; j < c; ++j) {
        if ((r >> j) & 1u) continue;
        unsigned t = r | (1u << j);
        const Resolution& tgt = res[t];
        const int sign = std::popcount(r & ((1u << j) - 1)) % 2 ? -1 : 1;
        // circle maps through representative nodes
        std::vector<int> fwd(static_cast<std::size_t>(src.circles), -1), back(static_cast<std::size_t>(tgt.circles), -1);
        for (int v = 0; v < a.nodes; ++v) {
          fwd[src.circle_of_node[v]] = tgt.circle_of_node[v];
          back[tgt.circle_of_node[v]] = src.circle_of_node[v];
        }
        std::vector<unsigned> outs;
        if (tgt.circles < src.circles) {
          unsigned m = 0;
          bool zero = false;
          std::vector<int> seen(static_cast<std::size_t>(tgt.circles), 0);
          for (int k = 0; k < src.circles; ++k) {
            if (!((l >> k) & 1u)) continue;
            int to = fwd[k];
            if (seen[to]) zero = true;
            seen[to] = 1;
            m |= 1u << to;
          }
          if (!zero) outs.push_back(m);
        } else {
          // which source circle splits, and into which two
          std::vector<int> hits(static_cast<std::size_t>(src.circles), 0);
          int d1 = -1, d2 = -1;
          for (int k = 0; k < tgt.circles; ++k) {
            // every target circle meets some node; distinguish the split pair
            if (hits[back[k]]++) d2 = k;
          }
          for (int k = 0; k < tgt.circles; ++k)
            if (k != d2 && back[k] == back[d2]) d1 = k;
          unsigned base = 0;
          for (int k = 0; k < tgt.circles; ++k)
            if (k != d1 && k != d2 && ((l >> back[k]) & 1u)) base |= 1u << k;
          if ((l >> back[d1]) & 1u) {
            outs.push_back(base | (1u << d1) | (1u << d2));
          } else {
            outs.push_back(base | (1u << d1));
            outs.push_back(base | (1u << d2));
          }
        }
        for (unsigned m : outs) row[index[t][m]] += sign;
      }
      SparseRow sr;
      for (auto& [col, v] : row)
        if (v != 0) sr.emplace_back(col, v);
      rows[{h2_of(r), q2_of(r, l)}].push_back(std::move(sr));
    }
  }

  std::map<std::pair<int, int>, int> rank_out;
  for (auto& [key, rs] : rows) {
    auto target = block_size.find({key.first + 2, key.second});
    int ncols = target == block_size.end() ? 0 : target->second;
    rank_out[key] = ncols ? sparse_rank(std::move(rs), ncols) : 0;
  }

  BettiTable b;
  const int mu2 = c + 2 * res[0].circles;
  b.mu2 = ((mu2 % 4) + 4) % 4;
  for (const auto& [key, n] : block_size) {
    auto prev = rank_out.find({key.first - 2, key.second});
    int r = n - rank_out[key] - (prev == rank_out.end() ? 0 : prev->second);
    if (r > 0) b.ranks[key] = r;
  }
  return b;
}

}  // namespace qtl
