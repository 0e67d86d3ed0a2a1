#include "subfan/braid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subfan {

int BraidGraph::index_of(const Word& w) const {
  auto it = std::find(vertices.begin(), vertices.end(), w);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::vector<std::pair<Word, IndexPair>> braid_neighbors(const CoxeterSystem& W, const Word& w) {
  std::vector<std::pair<Word, IndexPair>> out;
  const int len = static_cast<int>(w.size());
  for (int p = 0; p + 1 < len; ++p) {
    int a = w[p], b = w[p + 1];
    if (a == b) continue;
    int m = W.coxeter_number_m(a, b);
    if (p + m > len) continue;
    bool alternating = true;
    for (int k = 0; k < m && alternating; ++k) alternating = w[p + k] == (k % 2 ? b : a);
    if (!alternating) continue;
    Word v = w;
    for (int k = 0; k < m; ++k) v[p + k] = k % 2 ? a : b;
    out.push_back({v, {std::min(a, b), std::max(a, b)}});
  }
  return out;
}

BraidGraph braid_graph(const CoxeterSystem& W, const Permutation& element) {
  BraidGraph g;
  g.group = W;
  std::map<Word, int> index;
  Word seed = reduced_word(W, element);
  index[seed] = 0;
  g.vertices.push_back(seed);
  for (std::size_t head = 0; head < g.vertices.size(); ++head) {
    Word cur = g.vertices[head];
    for (auto& [nb, label] : braid_neighbors(W, cur)) {
      auto it = index.find(nb);
      int id;
      if (it == index.end()) {
        id = static_cast<int>(g.vertices.size());
        index[nb] = id;
        g.vertices.push_back(nb);
      } else {
        id = it->second;
      }
      if (static_cast<int>(head) < id) g.edges.push_back({static_cast<int>(head), id, label});
    }
  }
  return g;
}

std::vector<Word> enumerate_reduced_words(const CoxeterSystem& W, const Permutation& element) {
  auto g = braid_graph(W, element);
  std::sort(g.vertices.begin(), g.vertices.end());
  return g.vertices;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Path inside one contracted class, as original edges, from a to b.
std::vector<BraidEdge> class_path(const BraidGraph& g, const std::vector<std::vector<int>>& adj_inner,
                                  int a, int b) {
  if (a == b) return {};
  std::vector<int> prev_edge(g.vertices.size(), -1);
  std::vector<char> seen(g.vertices.size(), 0);
  std::deque<int> q{a};
  seen[a] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == b) break;
    for (int e : adj_inner[x]) {
      int y = g.edges[e].u == x ? g.edges[e].v : g.edges[e].u;
      if (seen[y]) continue;
      seen[y] = 1;
      prev_edge[y] = e;
      q.push_back(y);
    }
  }
  std::vector<BraidEdge> path;
  for (int x = b; x != a;) {
    const BraidEdge& e = g.edges[prev_edge[x]];
    path.push_back(e);
    x = e.u == x ? e.v : e.u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Bipartiteness contracted_bipartite(const BraidGraph& g, const std::set<IndexPair>& Z) {
  const int nv = static_cast<int>(g.vertices.size());
  UnionFind uf(nv);
  std::vector<std::vector<int>> inner(nv);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& ed = g.edges[e];
    if (Z.count(ed.label)) continue;
    uf.unite(ed.u, ed.v);
    inner[ed.u].push_back(e);
    inner[ed.v].push_back(e);
  }
  // Contracted multigraph on class representatives; edges keep their original index.
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& ed = g.edges[e];
    if (!Z.count(ed.label)) continue;
    adj[uf.find(ed.u)].push_back(e);
    adj[uf.find(ed.v)].push_back(e);
  }
  std::vector<int> color(nv, -1), parent_edge(nv, -1), depth(nv, 0);
  Bipartiteness res;
  for (int s = 0; s < nv && res.bipartite; ++s) {
    int rs = uf.find(s);
    if (color[rs] >= 0) continue;
    color[rs] = 0;
    std::deque<int> q{rs};
    while (!q.empty() && res.bipartite) {
      int x = q.front();
      q.pop_front();
      for (int e : adj[x]) {
        int a = uf.find(g.edges[e].u), b = uf.find(g.edges[e].v);
        int y = a == x ? b : a;
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          parent_edge[y] = e;
          depth[y] = depth[x] + 1;
          q.push_back(y);
        } else if (color[y] == color[x]) {
          auto climb = [&](int& v, std::vector<int>& path) {
            int e2 = parent_edge[v];
            path.push_back(e2);
            int a2 = uf.find(g.edges[e2].u);
            v = a2 == v ? uf.find(g.edges[e2].v) : a2;
          };
          std::vector<int> lx, ly;
          int p = x, r = y;
          while (depth[p] > depth[r]) climb(p, lx);
          while (depth[r] > depth[p]) climb(r, ly);
          while (p != r) {
            climb(p, lx);
            climb(r, ly);
          }
          std::vector<int> order{e};
          order.insert(order.end(), ly.begin(), ly.end());
          order.insert(order.end(), lx.rbegin(), lx.rend());
          const int start = uf.find(g.edges[e].u) == x ? g.edges[e].u : g.edges[e].v;
          int at = start;
          std::vector<BraidEdge> walk;
          for (int k : order) {
            const BraidEdge& ed = g.edges[k];
            int from = uf.find(ed.u) == uf.find(at) ? ed.u : ed.v;
            int to = from == ed.u ? ed.v : ed.u;
            auto bridge = class_path(g, inner, at, from);
            walk.insert(walk.end(), bridge.begin(), bridge.end());
            walk.push_back(ed);
            at = to;
          }
          auto bridge = class_path(g, inner, at, start);
          walk.insert(walk.end(), bridge.begin(), bridge.end());
          res.bipartite = false;
          res.odd_cycle = walk;
          break;
        }
      }
    }
  }
  return res;
}

StabledClasses stabled_classes(int n) {
  StabledClasses c;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) (j - i == 1 ? c.odd : c.even).insert({i, j});
  return c;
}

bool is_stabled(int n, const std::set<IndexPair>& Z) {
  auto c = stabled_classes(n);
  auto covers = [&](const std::set<IndexPair>& cls) {
    return std::all_of(cls.begin(), cls.end(), [&](const IndexPair& p) { return Z.count(p) > 0; });
  };
  auto disjoint = [&](const std::set<IndexPair>& cls) {
    return std::none_of(cls.begin(), cls.end(), [&](const IndexPair& p) { return Z.count(p) > 0; });
  };
  for (const auto& p : Z)
    if (!c.odd.count(p) && !c.even.count(p)) return false;
  return (covers(c.odd) || disjoint(c.odd)) && (covers(c.even) || disjoint(c.even));
}

CycleParity cycle_basis_parity(const BraidGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[g.edges[e].u].push_back(e);
    adj[g.edges[e].v].push_back(e);
  }
  std::vector<int> parent_edge(nv, -1), depth(nv, -1);
  std::vector<char> tree(g.edges.size(), 0);
  for (int s = 0; s < nv; ++s) {
    if (depth[s] >= 0) continue;
    depth[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int e : adj[x]) {
        int y = g.edges[e].u == x ? g.edges[e].v : g.edges[e].u;
        if (depth[y] >= 0) continue;
        depth[y] = depth[x] + 1;
        parent_edge[y] = e;
        tree[e] = 1;
        q.push_back(y);
      }
    }
  }
  auto up = [&](int x) {
    const auto& e = g.edges[parent_edge[x]];
    return e.u == x ? e.v : e.u;
  };
  CycleParity res;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (tree[e]) continue;
    std::size_t total = 1, even = 0, odd = 0;
    auto tally = [&](const BraidEdge& ed) {
      (g.group.coxeter_number_m(ed.label.first, ed.label.second) % 2 == 0 ? even : odd) += 1;
    };
    tally(g.edges[e]);
    int a = g.edges[e].u, b = g.edges[e].v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        tally(g.edges[parent_edge[a]]);
        a = up(a);
      } else {
        tally(g.edges[parent_edge[b]]);
        b = up(b);
      }
      ++total;
    }
    ++res.cycles;
    if (total % 2 || even % 2 || odd % 2) ++res.violations;
  }
  return res;
}

std::optional<std::vector<int>> braid_walk_signs(const BraidGraph& g, int anchor) {
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[g.edges[e].u].push_back(e);
    adj[g.edges[e].v].push_back(e);
  }
  std::vector<int> sign(nv, 0);
  sign[anchor] = 1;
  std::deque<int> q{anchor};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int e : adj[x]) {
      const auto& ed = g.edges[e];
      int y = ed.u == x ? ed.v : ed.u;
      int m = g.group.coxeter_number_m(ed.label.first, ed.label.second);
      int s = (m - 1) % 2 ? -sign[x] : sign[x];
      if (sign[y] == 0) {
        sign[y] = s;
        q.push_back(y);
      } else if (sign[y] != s) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

std::string to_dot(const BraidGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << word_to_string(g.vertices[i]) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label.first << e.label.second
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace subfan
