#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "subfan/complex.hpp"

using namespace subfan;

namespace {

// Facets by testing every subset of the right size.
std::vector<Face> brute_facets(const CoxeterSystem& W, const Word& Q) {
  const int r = static_cast<int>(Q.size()), N = W.longest_length();
  const Permutation w0 = longest_element(W);
  std::vector<Face> out;
  for (Face S = 0; S < (Face(1) << r); ++S) {
    if (face_size(S) != N) continue;
    Word w;
    for (int p = 0; p < r; ++p)
      if ((S >> p) & 1) w.push_back(Q[p]);
    if (evaluate(W, w) == w0) out.push_back(~S & ((Face(1) << r) - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> sorted(std::vector<Face> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Faces by size from the facets, via explicit subset enumeration.
std::vector<std::uint64_t> brute_fvector(const SimplicialComplex& K) {
  std::set<Face> faces;
  for (Face F : K.facets)
    for (Face S = F;; S = (S - 1) & F) {
      faces.insert(S);
      if (S == 0) break;
    }
  std::vector<std::uint64_t> f;
  for (Face S : faces) {
    std::size_t k = face_size(S);
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

}  // namespace

TEST_CASE("facets match subset enumeration") {
  struct Case {
    CoxeterSystem W;
    Word Q;
  };
  std::vector<Case> cases = {{CoxeterSystem::A(2), power({1, 2}, 4)},
                             {CoxeterSystem::A(2), {1, 2, 2, 1, 1, 2, 1}},
                             {CoxeterSystem::A(3), power({2, 1, 3}, 4)},
                             {CoxeterSystem::A(3), power({1, 3, 2}, 4)},
                             {CoxeterSystem::B(2), power({1, 2}, 5)},
                             {CoxeterSystem::A(3), {1, 2, 1, 2, 3, 2, 1, 2, 1, 2}}};
  for (const auto& c : cases) {
    auto K = subword_complex(c.W, c.Q);
    CHECK(sorted(K.facets) == brute_facets(c.W, c.Q));
    CHECK(f_vector(K) == brute_fvector(K));
  }
}

TEST_CASE("f-vectors of multi-associahedra") {
  const Word c3 = bipartite_coxeter(3);
  CHECK(f_vector(subword_complex(CoxeterSystem::A(3), multiassoc(3, 3, c3).Q)) ==
        std::vector<std::uint64_t>{1, 15, 105, 455, 1320, 2607, 3465, 2970, 1485, 330});
  CHECK(f_vector(subword_complex(CoxeterSystem::A(4), multiassoc(4, 2, {2, 4, 1, 3}).Q)) ==
        std::vector<std::uint64_t>{1, 18, 153, 732, 2115, 3762, 4026, 2376, 594});
  // Associahedron of dimension 3: 14 vertices of the polar.
  auto K = subword_complex(CoxeterSystem::A(3), multiassoc(3, 1, c3).Q);
  CHECK(f_vector(K) == std::vector<std::uint64_t>{1, 9, 21, 14});
}

TEST_CASE("Euler characteristic of spheres") {
  const Word c3 = bipartite_coxeter(3);
  for (int k = 1; k <= 3; ++k) {
    auto f = f_vector(subword_complex(CoxeterSystem::A(3), multiassoc(3, k, c3).Q));
    const long long dim = static_cast<long long>(f.size()) - 2;
    CHECK(euler_characteristic(f) == 1 + (dim % 2 ? -1 : 1));
  }
}

TEST_CASE("flips are unique and symmetric") {
  auto K = subword_complex(CoxeterSystem::A(3), power({2, 1, 3}, 4));
  std::set<Face> facets(K.facets.begin(), K.facets.end());
  for (Face F : K.facets) {
    for (int i : face_positions(F)) {
      Flip fl = flip(K, F, i);
      CHECK(facets.count(fl.facet));
      CHECK((fl.facet & ~F) == (Face(1) << fl.position));
      CHECK((F & ~fl.facet) == (Face(1) << i));
      int count = 0;
      for (Face G : K.facets) count += G != F && face_size(F & G) == face_size(F) - 1 && ((F & ~G) >> i & 1);
      CHECK(count == 1);
      CHECK(flip(K, fl.facet, fl.position).facet == F);
    }
  }
  auto adj = flip_graph(K);
  for (const auto& a : adj) CHECK(a.size() == static_cast<std::size_t>(face_size(K.facets[0])));
}

TEST_CASE("links and faces") {
  auto K = subword_complex(CoxeterSystem::A(2), power({1, 2}, 4));
  Face F = K.facets.front();
  auto pos = face_positions(F);
  Face v = Face(1) << pos[0];
  CHECK(is_face(K, v));
  CHECK(!is_face(K, (Face(1) << K.ground) - 1));
  auto L = link(K, v);
  CHECK(L.ground == K.ground - 1);
  std::size_t containing = 0;
  for (Face G : K.facets) containing += (G & v) != 0;
  CHECK(L.facets.size() == containing);
}

TEST_CASE("k-triangulations") {
  CHECK(relevant_diagonals(10, 3).size() == 15);
  CHECK(enumerate_k_triangulations(6, 1).sets.size() == 14);
  CHECK(enumerate_k_triangulations(8, 2).sets.size() == 84);
  CHECK(crossing({1, 3}, {2, 4}));
  CHECK(!crossing({1, 3}, {3, 5}));
  CHECK(!crossing({1, 5}, {2, 4}));
}

TEST_CASE("diagonal labels send facets to k-triangulations") {
  struct Case {
    int n, k;
    Word c;
  };
  for (const auto& cs : {Case{3, 1, {2, 1, 3}}, Case{3, 2, {2, 1, 3}}, Case{3, 3, {2, 1, 3}},
                         Case{4, 2, {2, 4, 1, 3}}}) {
    auto ma = multiassoc(cs.n, cs.k, cs.c);
    REQUIRE(ma.labels);
    auto K = subword_complex(CoxeterSystem::A(cs.n), ma.Q);
    auto T = enumerate_k_triangulations(ma.l, cs.k);
    std::map<Diagonal, int> index;
    for (std::size_t t = 0; t < T.diagonals.size(); ++t) index[T.diagonals[t]] = static_cast<int>(t);
    std::set<Face> expected(T.sets.begin(), T.sets.end()), got;
    for (Face F : K.facets) {
      Face S = 0;
      for (int p : face_positions(F)) S |= Face(1) << index.at((*ma.labels)[p]);
      got.insert(S);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("Obs(A3) and the combinatorial construction") {
  auto obs = obs_a3();
  CHECK(f_vector(obs) == std::vector<std::uint64_t>{1, 9, 30, 42, 21});
  auto ex = example_71();
  CHECK(f_vector(ex) == std::vector<std::uint64_t>{1, 9, 30, 42, 21});
  auto bij = example_71_bijection();
  std::set<Face> mapped;
  for (Face F : obs.facets) {
    Face G = 0;
    for (int p : face_positions(F)) {
      REQUIRE(bij[p] >= 0);
      G |= Face(1) << bij[p];
    }
    mapped.insert(G);
  }
  CHECK(mapped == std::set<Face>(ex.facets.begin(), ex.facets.end()));
}

TEST_CASE("commutation class") {
  auto cls = commutation_class(CoxeterSystem::A(3), {1, 3});
  CHECK(cls.size() == 2);
  auto big = commutation_class(CoxeterSystem::A(3), multiassoc(3, 1, {2, 1, 3}).Q);
  for (const auto& w : big) CHECK(subword_complex(CoxeterSystem::A(3), w).facets.size() == 14);
}
