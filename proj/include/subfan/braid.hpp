#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subfan/coxeter.hpp"

namespace subfan {

using IndexPair = std::pair<int, int>;  // unordered {i, j}, stored i < j

struct BraidEdge {
  int u = 0, v = 0;
  IndexPair label;
};

struct BraidGraph {
  CoxeterSystem group;
  std::vector<Word> vertices;
  std::vector<BraidEdge> edges;
  int index_of(const Word& w) const;
};

// Every word obtained from w by one braid relation, with its label.
std::vector<std::pair<Word, IndexPair>> braid_neighbors(const CoxeterSystem& W, const Word& w);

BraidGraph braid_graph(const CoxeterSystem& W, const Permutation& element);
std::vector<Word> enumerate_reduced_words(const CoxeterSystem& W, const Permutation& element);

struct Bipartiteness {
  bool bipartite = true;
  std::vector<BraidEdge> odd_cycle;  // closed walk through edges labeled in Z
};

// Contracts every edge labeled outside Z, then 2-colors the result.
Bipartiteness contracted_bipartite(const BraidGraph& g, const std::set<IndexPair>& Z);

struct StabledClasses {
  std::set<IndexPair> odd;   // m_ij = 3
  std::set<IndexPair> even;  // m_ij = 2
};
StabledClasses stabled_classes(int n);
bool is_stabled(int n, const std::set<IndexPair>& Z);

struct CycleParity {
  std::size_t cycles = 0;
  std::size_t violations = 0;  // cycles with an odd total, odd even-count or odd odd-count
};
// Fundamental cycles of a BFS spanning tree.
CycleParity cycle_basis_parity(const BraidGraph& g);

// Sign by walking braid moves from the anchor: (-1)^(m_ij - 1) per edge.
// Returns nullopt when the walk is inconsistent.
std::optional<std::vector<int>> braid_walk_signs(const BraidGraph& g, int anchor);

std::string to_dot(const BraidGraph& g);

}  // namespace subfan
