#include "subfan/complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace subfan {

std::vector<int> face_positions(Face f) {
  std::vector<int> out;
  while (f) {
    int p = std::countr_zero(f);
    out.push_back(p);
    f &= f - 1;
  }
  return out;
}

Face face_from_positions(const std::vector<int>& positions) {
  Face f = 0;
  for (int p : positions) {
    if (p < 0 || p >= 64) throw std::out_of_range("face position out of range");
    f |= Face(1) << p;
  }
  return f;
}

int face_size(Face f) { return std::popcount(f); }

namespace {

struct Search {
  const CoxeterSystem& W;
  const Word& Q;
  int N;
  std::vector<int> chosen;
  std::vector<std::vector<int>> out;

  // Length of the Demazure product of w with Q[from..].
  int demazure(Permutation w, int len, std::size_t from) const {
    for (std::size_t p = from; p < Q.size() && len < N; ++p) {
      if (!is_right_descent(W, w, Q[p])) {
        right_multiply(W, w, Q[p]);
        ++len;
      }
    }
    return len;
  }

  void run(std::size_t p, Permutation& w, int len) {
    if (len == N) {
      out.push_back(chosen);
      return;
    }
    if (p == Q.size()) return;
    const int s = Q[p];
    if (!is_right_descent(W, w, s)) {
      right_multiply(W, w, s);
      if (demazure(w, len + 1, p + 1) == N) {
        chosen.push_back(static_cast<int>(p));
        run(p + 1, w, len + 1);
        chosen.pop_back();
      }
      right_multiply(W, w, s);
    }
    if (demazure(w, len, p + 1) == N) run(p + 1, w, len);
  }
};

}  // namespace

std::vector<std::vector<int>> reduced_subwords(const CoxeterSystem& W, const Word& Q) {
  check_word(W, Q);
  Search s{W, Q, W.longest_length(), {}, {}};
  Permutation w = identity(W);
  if (s.demazure(w, 0, 0) != s.N) return {};
  s.run(0, w, 0);
  return s.out;
}

SubwordComplex subword_complex(const CoxeterSystem& W, const Word& Q) {
  if (Q.size() > 64) throw std::invalid_argument("words longer than 64 letters are not supported");
  auto subs = reduced_subwords(W, Q);
  if (subs.empty()) throw std::invalid_argument("word contains no reduced expression of w0");
  SubwordComplex K;
  K.group = W;
  K.word = Q;
  K.ground = static_cast<int>(Q.size());
  const Face all = Q.size() == 64 ? ~Face(0) : (Face(1) << Q.size()) - 1;
  for (const auto& s : subs) K.facets.push_back(all & ~face_from_positions(s));
  std::sort(K.facets.begin(), K.facets.end(),
            [](Face a, Face b) { return face_positions(a) < face_positions(b); });
  return K;
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& K) {
  if (K.facets.empty()) return {0};
  int dim = 0;
  for (Face f : K.facets) dim = std::max(dim, face_size(f));
  std::vector<std::uint64_t> f(dim + 1, 0);
  std::vector<std::unordered_set<Face>> by_size(dim + 1);
  for (Face F : K.facets) by_size[face_size(F)].insert(F);
  for (int s = dim; s >= 0; --s) {
    f[s] = by_size[s].size();
    if (s == 0) break;
    for (Face F : by_size[s]) {
      for (Face rest = F; rest; rest &= rest - 1) by_size[s - 1].insert(F & ~(rest & -rest));
    }
    by_size[s].clear();
  }
  return f;
}

long long euler_characteristic(const std::vector<std::uint64_t>& f) {
  long long chi = 0;
  for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * static_cast<long long>(f[i]);
  return chi;
}

Flip flip(const SubwordComplex& K, Face F, int i) {
  if (!((F >> i) & 1)) throw std::invalid_argument("flip: position not in facet");
  const Face all = K.word.size() == 64 ? ~Face(0) : (Face(1) << K.word.size()) - 1;
  Face comp = (all & ~F) | (Face(1) << i);
  for (int j : face_positions(comp)) {
    if (j == i) continue;
    Word w;
    for (int p : face_positions(comp & ~(Face(1) << j))) w.push_back(K.word[p]);
    if (is_reduced(K.group, w)) return {(F & ~(Face(1) << i)) | (Face(1) << j), j};
  }
  throw std::logic_error("flip: no partner found");
}

bool is_face(const SimplicialComplex& K, Face face) {
  return std::any_of(K.facets.begin(), K.facets.end(), [&](Face F) { return (F & face) == face; });
}

SimplicialComplex link(const SimplicialComplex& K, Face face) {
  if (!is_face(K, face)) throw std::invalid_argument("link: not a face");
  std::vector<int> remap(K.ground, -1);
  int next = 0;
  for (int p = 0; p < K.ground; ++p)
    if (!((face >> p) & 1)) remap[p] = next++;
  SimplicialComplex L;
  L.ground = next;
  for (Face F : K.facets) {
    if ((F & face) != face) continue;
    Face g = 0;
    for (int p : face_positions(F & ~face)) g |= Face(1) << remap[p];
    L.facets.push_back(g);
  }
  std::sort(L.facets.begin(), L.facets.end(),
            [](Face a, Face b) { return face_positions(a) < face_positions(b); });
  return L;
}

std::vector<std::vector<int>> flip_graph(const SubwordComplex& K) {
  std::unordered_map<Face, int> index;
  for (std::size_t t = 0; t < K.facets.size(); ++t) index[K.facets[t]] = static_cast<int>(t);
  std::vector<std::vector<int>> adj(K.facets.size());
  for (std::size_t t = 0; t < K.facets.size(); ++t)
    for (int i : face_positions(K.facets[t])) adj[t].push_back(index.at(flip(K, K.facets[t], i).facet));
  return adj;
}

std::string diagonal_to_string(const Diagonal& d) {
  if (d.p < 10 && d.q < 10) return std::to_string(d.p) + std::to_string(d.q);
  return std::to_string(d.p) + "-" + std::to_string(d.q);
}

std::vector<Diagonal> relevant_diagonals(int l, int k) {
  std::vector<Diagonal> out;
  for (int p = 1; p <= l; ++p)
    for (int q = p + 1; q <= l; ++q) {
      int inside = q - p - 1, outside = l - (q - p) - 1;
      if (inside >= k && outside >= k) out.push_back({p, q});
    }
  return out;
}

bool crossing(const Diagonal& a, const Diagonal& b) {
  return (a.p < b.p && b.p < a.q && a.q < b.q) || (b.p < a.p && a.p < b.q && b.q < a.q);
}

KTriangulations enumerate_k_triangulations(int l, int k) {
  if (l < 2 * k + 1) throw std::invalid_argument("need l >= 2k+1");
  KTriangulations res;
  res.diagonals = relevant_diagonals(l, k);
  const int D = static_cast<int>(res.diagonals.size());
  if (D > 64) throw std::invalid_argument("too many diagonals");
  const int target = k * (l - 2 * k - 1);
  std::vector<Face> cross(D, 0);
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      if (crossing(res.diagonals[a], res.diagonals[b])) cross[a] |= Face(1) << b;

  // True when the set has k pairwise crossing members among `cand`.
  auto has_clique = [&](auto&& self, Face cand, int need) -> bool {
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    for (Face rest = cand; rest; rest &= rest - 1) {
      int a = std::countr_zero(rest);
      Face later = rest & ~(Face(1) << a);
      if (self(self, later & cross[a], need - 1)) return true;
    }
    return false;
  };
  std::vector<Face> out;
  auto rec = [&](auto&& self, int idx, Face set, int size) -> void {
    if (size == target) {
      out.push_back(set);
      return;
    }
    if (D - idx < target - size) return;
    // Take idx if it creates no (k+1)-crossing.
    if (!has_clique(has_clique, set & cross[idx], k))
      self(self, idx + 1, set | (Face(1) << idx), size + 1);
    self(self, idx + 1, set, size);
  };
  rec(rec, 0, 0, 0);
  res.sets = out;
  return res;
}

Word bipartite_coxeter(int n) {
  Word c;
  for (int s = 2; s <= n; s += 2) c.push_back(s);
  for (int s = 1; s <= n; s += 2) c.push_back(s);
  return c;
}

namespace {

const std::vector<Diagonal>& a4_labels(int k) {
  static const std::vector<Diagonal> l92 = {
      {1, 6}, {2, 5}, {1, 7}, {2, 6}, {2, 7}, {3, 6}, {2, 8}, {3, 7}, {3, 8},
      {4, 7}, {3, 9}, {4, 8}, {4, 9}, {5, 8}, {1, 4}, {5, 9}, {1, 5}, {6, 9}};
  static const std::vector<Diagonal> l113 = {
      {1, 7}, {2, 6}, {1, 8}, {2, 7}, {2, 8}, {3, 7}, {2, 9}, {3, 8},
      {3, 9}, {4, 8}, {3, 10}, {4, 9}, {4, 10}, {5, 9}, {4, 11}, {5, 10},
      {5, 11}, {6, 10}, {1, 5}, {6, 11}, {1, 6}, {7, 11}};
  return k == 2 ? l92 : l113;
}

}  // namespace

Multiassoc multiassoc(int n, int k, const Word& c) {
  const CoxeterSystem W = CoxeterSystem::A(n);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Multiassoc res;
  res.Q = concat(power(c, k), sorted_word_w0(W, c));
  res.l = n + 2 * k + 1;
  if (n == 3) {
    auto diags = relevant_diagonals(res.l, k);
    if (diags.size() == res.Q.size()) {
      // Lexicographic order, with the first diagonal moved to the second-to-last position.
      std::vector<Diagonal> lab(diags.begin() + 1, diags.end());
      lab.insert(lab.end() - 1, diags.front());
      res.labels = lab;
    }
  } else if (n == 4 && (k == 2 || k == 3) && c == Word{2, 4, 1, 3}) {
    res.labels = a4_labels(k);
  }
  return res;
}

SubwordComplex obs_a3() {
  return subword_complex(CoxeterSystem::A(3), {1, 2, 1, 2, 3, 2, 1, 2, 1, 2});
}

SimplicialComplex example_71() {
  const std::vector<std::pair<int, int>> c1 = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  const std::vector<std::pair<int, int>> c2 = {{5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}};
  auto bit = [](int v) { return Face(1) << (v - 1); };
  SimplicialComplex K;
  K.ground = 9;
  for (auto [a, b] : c1)
    for (auto [x, y] : c2) {
      Face F = bit(a) | bit(b) | bit(x) | bit(y);
      if ((F & (bit(1) | bit(4))) == (bit(1) | bit(4))) continue;
      K.facets.push_back(F);
    }
  const int extra[6][4] = {{1, 5, 6, 9}, {1, 6, 7, 9}, {1, 7, 8, 9},
                           {4, 5, 6, 9}, {4, 6, 7, 9}, {4, 7, 8, 9}};
  for (auto& t : extra) K.facets.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]) | bit(t[3]));
  std::sort(K.facets.begin(), K.facets.end(),
            [](Face a, Face b) { return face_positions(a) < face_positions(b); });
  return K;
}

std::vector<int> example_71_bijection() {
  const Word Q = {1, 2, 1, 2, 3, 2, 1, 2, 1, 2};
  std::vector<int> out(Q.size(), -1);
  int v = 0;
  for (std::size_t p = 0; p < Q.size(); ++p)
    if (Q[p] != 3) out[p] = v++;
  return out;
}

std::vector<Word> commutation_class(const CoxeterSystem& W, const Word& Q) {
  std::set<Word> seen{Q};
  std::deque<Word> q{Q};
  while (!q.empty()) {
    Word w = q.front();
    q.pop_front();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1] || W.coxeter_number_m(w[p], w[p + 1]) != 2) continue;
      Word v = w;
      std::swap(v[p], v[p + 1]);
      if (seen.insert(v).second) q.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string to_polymake(const SimplicialComplex& K) {
  std::ostringstream os;
  for (Face F : K.facets) {
    os << '{';
    auto pos = face_positions(F);
    for (std::size_t t = 0; t < pos.size(); ++t) os << (t ? " " : "") << pos[t];
    os << "}\n";
  }
  return os.str();
}

}  // namespace subfan
