#pragma once

#include <string>
#include <utility>
#include <vector>

namespace subfan {

// Letters are 1-based generator indices.
using Word = std::vector<int>;
// One-line notation. Type A_n: a permutation of 1..n+1.
// Type B_n: a signed permutation of 1..n, generator 1 negates the first entry
// and generator i >= 2 swaps entries i-1 and i.
using Permutation = std::vector<int>;

struct CoxeterSystem {
  char type = 'A';
  int rank = 1;

  static CoxeterSystem A(int n) { return {'A', n}; }
  static CoxeterSystem B(int n) { return {'B', n}; }

  int coxeter_number_m(int i, int j) const;  // order of s_i s_j
  int longest_length() const;                // N = l(w0)
  bool operator==(const CoxeterSystem&) const = default;
};

Permutation identity(const CoxeterSystem& W);
bool is_right_descent(const CoxeterSystem& W, const Permutation& w, int s);
void right_multiply(const CoxeterSystem& W, Permutation& w, int s);
int length(const CoxeterSystem& W, const Permutation& w);
Permutation evaluate(const CoxeterSystem& W, const Word& word);
bool is_reduced(const CoxeterSystem& W, const Word& word);
Permutation longest_element(const CoxeterSystem& W);
Word reduced_word(const CoxeterSystem& W, Permutation w);
void check_word(const CoxeterSystem& W, const Word& word);

// Greedy leftmost reduced expression of w0 inside c c c ...
Word sorted_word_w0(const CoxeterSystem& W, const Word& c);
bool is_coxeter_element(const CoxeterSystem& W, const Word& c);
Word power(const Word& c, int m);
Word concat(const Word& a, const Word& b);

// Digits when every letter is < 10, comma separated otherwise.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

// Positive root alpha_lo + ... + alpha_hi of type A (1-based, lo <= hi).
struct Root {
  int lo = 1, hi = 1;
  std::vector<int> coeffs(int n) const;
  bool contains(int s) const { return lo <= s && s <= hi; }
  bool operator==(const Root&) const = default;
};
std::string root_to_string(const Root& r);

// beta_k = w_1 ... w_{k-1}(alpha_{w_k}) for a reduced type-A word.
std::vector<Root> inversion_roots(int n, const Word& word);

// Restriction of c to the support of alpha, in the order of c.
struct ParabolicData {
  std::vector<int> support;
  Word c_alpha;
};
ParabolicData parabolic_data(const Root& alpha, const Word& c);

// Sign of a reduced expression of w0 in type A via the multi-permutation of
// its inversion sequence.
int sign_w0(int n, const Word& word);

// sign(w') == (-1)^(i-j) sign(w) for w \ w_i = w' \ w'_j (0-based positions).
bool flip_sign_consistency(int n, const Word& w, const Word& w2, int i, int j);

}  // namespace subfan
