#include "subfan/coxeter.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subfan {

int CoxeterSystem::coxeter_number_m(int i, int j) const {
  if (i == j) return 1;
  if (type == 'B' && std::min(i, j) == 1 && std::max(i, j) == 2) return 4;
  return std::abs(i - j) == 1 ? 3 : 2;
}

int CoxeterSystem::longest_length() const {
  return type == 'B' ? rank * rank : rank * (rank + 1) / 2;
}

Permutation identity(const CoxeterSystem& W) {
  Permutation w(W.type == 'B' ? W.rank : W.rank + 1);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i) + 1;
  return w;
}

bool is_right_descent(const CoxeterSystem& W, const Permutation& w, int s) {
  if (W.type == 'B') return s == 1 ? w[0] < 0 : w[s - 2] > w[s - 1];
  return w[s - 1] > w[s];
}

void right_multiply(const CoxeterSystem& W, Permutation& w, int s) {
  if (W.type == 'B') {
    if (s == 1)
      w[0] = -w[0];
    else
      std::swap(w[s - 2], w[s - 1]);
    return;
  }
  std::swap(w[s - 1], w[s]);
}

int length(const CoxeterSystem& W, const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  if (W.type == 'B') {
    // inv(w) + sum over negative entries of |w(j)|
    int neg = 0;
    for (int x : w)
      if (x < 0) neg -= x;
    return inv + neg;
  }
  return inv;
}

void check_word(const CoxeterSystem& W, const Word& word) {
  for (int s : word)
    if (s < 1 || s > W.rank)
      throw std::invalid_argument("letter " + std::to_string(s) + " out of range for rank " +
                                  std::to_string(W.rank));
}

Permutation evaluate(const CoxeterSystem& W, const Word& word) {
  check_word(W, word);
  Permutation w = identity(W);
  for (int s : word) right_multiply(W, w, s);
  return w;
}

bool is_reduced(const CoxeterSystem& W, const Word& word) {
  check_word(W, word);
  Permutation w = identity(W);
  for (int s : word) {
    if (is_right_descent(W, w, s)) return false;
    right_multiply(W, w, s);
  }
  return true;
}

Permutation longest_element(const CoxeterSystem& W) {
  Permutation w = identity(W);
  if (W.type == 'B') {
    for (int& x : w) x = -x;
  } else {
    std::reverse(w.begin(), w.end());
  }
  return w;
}

Word reduced_word(const CoxeterSystem& W, Permutation w) {
  Word out;
  for (bool found = true; found;) {
    found = false;
    for (int s = 1; s <= W.rank; ++s) {
      if (is_right_descent(W, w, s)) {
        right_multiply(W, w, s);
        out.push_back(s);
        found = true;
        break;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_coxeter_element(const CoxeterSystem& W, const Word& c) {
  if (static_cast<int>(c.size()) != W.rank) return false;
  std::vector<int> seen(W.rank + 1, 0);
  for (int s : c) {
    if (s < 1 || s > W.rank || seen[s]) return false;
    seen[s] = 1;
  }
  return true;
}

Word sorted_word_w0(const CoxeterSystem& W, const Word& c) {
  if (!is_coxeter_element(W, c)) throw std::invalid_argument("not a Coxeter element: " + word_to_string(c));
  const int N = W.longest_length();
  Word out;
  Permutation w = identity(W);
  for (std::size_t k = 0; static_cast<int>(out.size()) < N; ++k) {
    int s = c[k % c.size()];
    if (!is_right_descent(W, w, s)) {
      right_multiply(W, w, s);
      out.push_back(s);
    }
  }
  return out;
}

Word power(const Word& c, int m) {
  Word out;
  for (int i = 0; i < m; ++i) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_to_string(const Word& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](int s) { return s >= 0 && s < 10; });
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) os << ',';
    os << w[i];
  }
  return os.str();
}

Word parse_word(const std::string& s) {
  Word out;
  if (s.find_first_of(", ") != std::string::npos) {
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, s.find(',') != std::string::npos ? ',' : ' ')) {
      if (tok.empty()) continue;
      out.push_back(std::stoi(tok));
    }
    return out;
  }
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad word: " + s);
    out.push_back(ch - '0');
  }
  return out;
}

std::vector<int> Root::coeffs(int n) const {
  std::vector<int> v(n, 0);
  for (int s = lo; s <= hi; ++s) v[s - 1] = 1;
  return v;
}

std::string root_to_string(const Root& r) {
  std::string out;
  for (int s = r.lo; s <= r.hi; ++s) {
    if (!out.empty()) out += "+";
    out += "a" + std::to_string(s);
  }
  return out;
}

std::vector<Root> inversion_roots(int n, const Word& word) {
  const CoxeterSystem W = CoxeterSystem::A(n);
  if (!is_reduced(W, word)) throw std::invalid_argument("inversion_roots: word not reduced");
  Permutation u = identity(W);
  std::vector<Root> out;
  for (int s : word) {
    int a = u[s - 1], b = u[s];
    out.push_back({std::min(a, b), std::max(a, b) - 1});
    right_multiply(W, u, s);
  }
  return out;
}

ParabolicData parabolic_data(const Root& alpha, const Word& c) {
  if (alpha.lo < 1 || alpha.hi < alpha.lo) throw std::invalid_argument("not a positive root");
  ParabolicData d;
  for (int s = alpha.lo; s <= alpha.hi; ++s) d.support.push_back(s);
  for (int s : c)
    if (alpha.contains(s)) d.c_alpha.push_back(s);
  return d;
}

int sign_w0(int n, const Word& word) {
  const CoxeterSystem W = CoxeterSystem::A(n);
  if (static_cast<int>(word.size()) != W.longest_length() || !is_reduced(W, word))
    throw std::invalid_argument("sign: not a reduced expression of w0: " + word_to_string(word));
  auto roots = inversion_roots(n, word);
  int inv = 0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i].lo > roots[j].lo) ++inv;
  return inv % 2 ? -1 : 1;
}

bool flip_sign_consistency(int n, const Word& w, const Word& w2, int i, int j) {
  if (w.size() != w2.size() || i < 0 || j < 0 || i >= static_cast<int>(w.size()) ||
      j >= static_cast<int>(w2.size()))
    throw std::invalid_argument("flip: bad positions");
  Word a = w, b = w2;
  a.erase(a.begin() + i);
  b.erase(b.begin() + j);
  if (a != b) throw std::invalid_argument("flip: w \\ w_i != w' \\ w'_j");
  int expect = ((i - j) % 2 == 0) ? 1 : -1;
  return sign_w0(n, w2) == expect * sign_w0(n, w);
}

}  // namespace subfan
