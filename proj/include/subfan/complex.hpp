#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subfan/coxeter.hpp"

namespace subfan {

// Bit p set <=> position p (0-based) belongs to the face.
using Face = std::uint64_t;

std::vector<int> face_positions(Face f);
Face face_from_positions(const std::vector<int>& positions);
int face_size(Face f);

struct SimplicialComplex {
  int ground = 0;             // vertices are 0..ground-1
  std::vector<Face> facets;   // sorted by position lists
};

struct SubwordComplex : SimplicialComplex {
  CoxeterSystem group;
  Word word;
};

// Facets of Delta(Q, w0): complements of reduced expressions of w0 in Q.
SubwordComplex subword_complex(const CoxeterSystem& W, const Word& Q);

// Position sets of Q spelling reduced expressions of w0, left-greedy order.
std::vector<std::vector<int>> reduced_subwords(const CoxeterSystem& W, const Word& Q);

// (f_-1, f_0, ..., f_{d}) by downward closure.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& K);
long long euler_characteristic(const std::vector<std::uint64_t>& f);

struct Flip {
  Face facet;
  int position;  // j, the position entering the new facet
};
// Unique facet J with F \ {i} = J \ {j}.
Flip flip(const SubwordComplex& K, Face F, int i);

// Facets of the link, relabelled onto the remaining ground positions in order.
SimplicialComplex link(const SimplicialComplex& K, Face face);
bool is_face(const SimplicialComplex& K, Face face);

// Adjacency of the flip graph, facets indexed as in K.facets.
std::vector<std::vector<int>> flip_graph(const SubwordComplex& K);

struct Diagonal {
  int p = 0, q = 0;  // 1 <= p < q <= l
  bool operator==(const Diagonal&) const = default;
  bool operator<(const Diagonal& o) const { return p != o.p ? p < o.p : q < o.q; }
};
std::string diagonal_to_string(const Diagonal& d);

// k-relevant diagonals of the l-gon in lexicographic order.
std::vector<Diagonal> relevant_diagonals(int l, int k);
bool crossing(const Diagonal& a, const Diagonal& b);

struct KTriangulations {
  std::vector<Diagonal> diagonals;  // ground set
  std::vector<Face> sets;           // bitmasks over diagonals
};
KTriangulations enumerate_k_triangulations(int l, int k);

// Default Coxeter element: even generators then odd ones, each increasing.
Word bipartite_coxeter(int n);

struct Multiassoc {
  Word Q;                                      // c^k w0(c)
  int l = 0;                                   // polygon size n + 2k + 1
  std::optional<std::vector<Diagonal>> labels; // position -> diagonal when implemented
};
// Labeling implemented for n = 3 (l = 2k+4) and for the two A4 instances
// with c = 2413 and k = 2, 3.
Multiassoc multiassoc(int n, int k, const Word& c);

SubwordComplex obs_a3();
// Join of the cycles (1234) and (56789), minus {1,4} * (56789), plus six
// tetrahedra. Vertices 1..9 are stored as bits 0..8.
SimplicialComplex example_71();
// Position of 1212321212 (0-based) -> vertex bit, skipping the letter 3.
std::vector<int> example_71_bijection();

// Words reachable by swapping adjacent commuting letters.
std::vector<Word> commutation_class(const CoxeterSystem& W, const Word& Q);

std::string to_polymake(const SimplicialComplex& K);

}  // namespace subfan
