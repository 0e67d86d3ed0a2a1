#include "subfan/counting.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "subfan/braid.hpp"
#include "subfan/linalg.hpp"
#include "subfan/parallel.hpp"

namespace subfan {

EmbeddingEnumerator::EmbeddingEnumerator(Word Q, Word c, int m)
    : Q_(std::move(Q)), c_(std::move(c)), target_(power(c_, m)), m_(m), cur_(Q_.size(), -1) {}

bool EmbeddingEnumerator::fill_from(std::size_t i, int start) {
  for (; i < Q_.size(); ++i) {
    int p = start;
    while (p < static_cast<int>(target_.size()) && target_[p] != Q_[i]) ++p;
    if (p >= static_cast<int>(target_.size())) return false;
    cur_[i] = p;
    start = p + 1;
  }
  return true;
}

std::optional<Embedding> EmbeddingEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_from(0, 0)) {
      done_ = true;
      return std::nullopt;
    }
    return Embedding{Q_, c_, m_, cur_};
  }
  for (int i = static_cast<int>(Q_.size()) - 1; i >= 0; --i) {
    int p = cur_[i] + 1;
    while (p < static_cast<int>(target_.size()) && target_[p] != Q_[i]) ++p;
    if (p >= static_cast<int>(target_.size())) continue;
    cur_[i] = p;
    if (fill_from(i + 1, p + 1)) return Embedding{Q_, c_, m_, cur_};
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Embedding> enumerate_embeddings(const Word& Q, const Word& c, int m) {
  std::vector<Embedding> out;
  EmbeddingEnumerator e(Q, c, m);
  while (auto x = e.next()) out.push_back(*x);
  return out;
}

std::vector<Root> root_order(int n, const Word& c) {
  Word w0c = sorted_word_w0(CoxeterSystem::A(n), c);
  auto roots = inversion_roots(n, w0c);
  if (roots.size() >= 2 && sign_w0(n, w0c) < 0) std::swap(roots[0], roots[1]);
  return roots;
}

namespace {

// Number of occurrences of u as a subsequence of P that use position j, for every j.
std::vector<long long> occurrences_through(const Word& u, const Word& P) {
  const std::size_t L = u.size(), r = P.size();
  // pre[t][p]: embeddings of u[0..t) into P[0..p); suf[t][p]: of u[t..L) into P[p..r)
  std::vector<std::vector<long long>> pre(L + 1, std::vector<long long>(r + 1, 0)),
      suf(L + 1, std::vector<long long>(r + 2, 0));
  for (std::size_t p = 0; p <= r; ++p) pre[0][p] = 1;
  for (std::size_t t = 1; t <= L; ++t)
    for (std::size_t p = 1; p <= r; ++p)
      pre[t][p] = pre[t][p - 1] + (P[p - 1] == u[t - 1] ? pre[t - 1][p - 1] : 0);
  for (std::size_t p = 0; p <= r; ++p) suf[L][p] = 1;
  for (int t = static_cast<int>(L) - 1; t >= 0; --t)
    for (int p = static_cast<int>(r) - 1; p >= 0; --p)
      suf[t][p] = suf[t][p + 1] + (P[p] == u[t] ? suf[t + 1][p + 1] : 0);
  std::vector<long long> out(r, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t t = 0; t < L; ++t)
      if (P[j] == u[t]) out[j] += pre[t][j] * suf[t + 1][j + 1];
  return out;
}

}  // namespace

CountingMatrix counting_matrix_in(int n, const Word& c, const Word& P) {
  const CoxeterSystem W = CoxeterSystem::A(n);
  check_word(W, P);
  CountingMatrix cm;
  cm.rank = n;
  cm.c = c;
  cm.target = P;
  cm.roots = root_order(n, c);
  cm.D = RationalMatrix::Zero(static_cast<Eigen::Index>(cm.roots.size()), static_cast<Eigen::Index>(P.size()));
  for (std::size_t a = 0; a < cm.roots.size(); ++a) {
    Word ca = parabolic_data(cm.roots[a], c).c_alpha;
    for (const Word& u : enumerate_reduced_words(W, evaluate(W, ca))) {
      auto occ = occurrences_through(u, P);
      for (std::size_t j = 0; j < P.size(); ++j)
        cm.D(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j)) += Rational(occ[j]);
    }
  }
  return cm;
}

CountingMatrix counting_matrix(int n, const Word& c, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  auto cm = counting_matrix_in(n, c, power(c, m));
  cm.m = m;
  return cm;
}

bool has_closed_form(int n, const Word& c) {
  return (n == 1 && c == Word{1}) || (n == 2 && c == Word{1, 2}) ||
         (n == 3 && (c == Word{2, 1, 3} || c == Word{1, 2, 3}));
}

namespace {

Rational binom2(const Rational& x) { return x * (x - 1) / 2; }

// Column block for copy i (blocks run i = m..1 from left to right).
std::vector<std::vector<Rational>> closed_block(int n, const Word& c, int m, int i) {
  const Rational I(i), M(m);
  if (n == 1) return {{1}};
  if (n == 2) return {{1, 0}, {I, M - I + 1}, {0, 1}};
  if (c == Word{2, 1, 3})
    return {{1, 0, 0},
            {I, M - I + 1, 0},
            {I, 0, M - I + 1},
            {I * I, binom2(M + 1) - binom2(I), binom2(M + 1) - binom2(I)},
            {0, 0, 1},
            {0, 1, 0}};
  return {{1, 0, 0},
          {I, M - I + 1, 0},
          {binom2(I + 1), (M - I + 1) * I, binom2(M - I + 2)},
          {0, 1, 0},
          {0, I, M - I + 1},
          {0, 0, 1}};
}

}  // namespace

CountingMatrix closed_form_counting(int n, const Word& c, int m) {
  if (!has_closed_form(n, c)) throw std::invalid_argument("no closed form for this Coxeter element");
  CountingMatrix cm;
  cm.rank = n;
  cm.c = c;
  cm.m = m;
  cm.target = power(c, m);
  cm.roots = root_order(n, c);
  const Eigen::Index N = static_cast<Eigen::Index>(cm.roots.size());
  cm.D = RationalMatrix::Zero(N, n * m);
  for (int t = 0; t < m; ++t) {
    auto B = closed_block(n, c, m, m - t);
    for (Eigen::Index r = 0; r < N; ++r)
      for (int k = 0; k < n; ++k) cm.D(r, t * n + k) = B[r][k];
  }
  return cm;
}

RationalMatrix restricted_matrix(const CountingMatrix& D, const Embedding& phi) {
  if (phi.c != D.c || power(phi.c, phi.m) != D.target)
    throw std::invalid_argument("embedding targets a different word");
  for (std::size_t i = 0; i < phi.positions.size(); ++i)
    if (D.target.at(phi.positions[i]) != phi.source.at(i))
      throw std::invalid_argument("embedding does not preserve letters");
  return select_columns(D.D, phi.positions);
}

ParamSet ParamSet::identity(int m) {
  ParamSet p;
  p.m = m;
  p.a.assign(m + 1, 0);
  p.b.assign(m + 1, 0);
  p.c.assign(m + 1, 0);
  for (int i = 1; i <= m; ++i) p.a[i] = p.b[i] = p.c[i] = i;
  return p;
}

RationalMatrix param_counting(const Word& c, const ParamSet& P) {
  const bool c123 = c == Word{1, 2, 3}, c213 = c == Word{2, 1, 3};
  if (!c123 && !c213) throw std::invalid_argument("param_counting supports c = 123 and c = 213");
  const int m = P.m;
  const Rational M(m);
  RationalMatrix D = RationalMatrix::Zero(6, 3 * m);
  for (int t = 0; t < m; ++t) {
    const int i = m - t;
    const Rational &a = P.a[i], &b = P.b[i], &cc = P.c[i];
    std::vector<std::vector<Rational>> B;
    if (c123)
      B = {{1, 0, 0},
           {a, M - b + 1, 0},
           {binom2(a + 1), (M - b + 1) * b, binom2(M - cc + 2)},
           {0, 1, 0},
           {0, b, M - cc + 1},
           {0, 0, 1}};
    else
      B = {{1, 0, 0},
           {a, M - b + 1, 0},
           {a, 0, M - cc + 1},
           {a * a, binom2(M + 1) - binom2(b), binom2(M + 1) - binom2(cc)},
           {0, 0, 1},
           {0, 1, 0}};
    for (int r = 0; r < 6; ++r)
      for (int k = 0; k < 3; ++k) D(r, 3 * t + k) = B[r][k];
  }
  return D;
}

InequalityCheck check_signature_inequalities(const Word& c, const ParamSet& P) {
  const bool c123 = c == Word{1, 2, 3}, c213 = c == Word{2, 1, 3};
  if (!c123 && !c213) throw std::invalid_argument("signature inequalities exist for c = 123 and c = 213");
  InequalityCheck res;
  auto require = [&](const Rational& v, const std::string& what) {
    if (v <= 0) {
      res.ok = false;
      res.violated.push_back(what + " = " + to_string(v));
    }
  };
  const int m = P.m;
  const auto &a = P.a, &b = P.b, &cc = P.c;
  for (int i = 2; i <= m; ++i) {
    std::string s = std::to_string(i);
    require(a[i] - a[i - 1], "a" + s + "-a" + std::to_string(i - 1));
    require(b[i] - b[i - 1], "b" + s + "-b" + std::to_string(i - 1));
    require(cc[i] - cc[i - 1], "c" + s + "-c" + std::to_string(i - 1));
  }
  auto pairs = [&](int lo, int hi, auto&& term, const Rational& shift, const std::string& name) {
    for (int i = lo; i <= hi; ++i)
      for (int j = i + 1; j <= hi; ++j)
        require(term(i) + term(j) + shift, name + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  };
  if (c123) {
    pairs(2, m, [&](int i) { return 2 * b[i] - cc[i] - a[i - 1]; }, 0, "2b-c-a'");
    pairs(1, m - 1, [&](int i) { return cc[i + 1] + a[i] - 2 * b[i]; }, 0, "c'+a-2b");
  } else {
    pairs(1, m, [&](int i) { return 2 * a[i] - b[i] - cc[i]; }, 2, "2a-b-c");
    pairs(2, m, [&](int i) { return b[i] + cc[i] - 2 * a[i - 1]; }, -2, "b+c-2a'");
  }
  return res;
}

SignFunction default_sign(const CoxeterSystem& W, const Word& c) {
  if (W.type == 'A') {
    const int n = W.rank;
    return [n](const Word& w) { return sign_w0(n, w); };
  }
  auto g = braid_graph(W, longest_element(W));
  auto signs = braid_walk_signs(g, g.index_of(sorted_word_w0(W, c)));
  if (!signs) throw std::logic_error("braid walk sign is inconsistent");
  auto table = std::make_shared<std::map<Word, int>>();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) (*table)[g.vertices[v]] = (*signs)[v];
  return [table](const Word& w) {
    auto it = table->find(w);
    if (it == table->end()) throw std::invalid_argument("sign: not a reduced expression of w0");
    return it->second;
  };
}

SignatureReport signature_report(const CoxeterSystem& W, const RationalMatrix& D, const Word& Q,
                                 const SignFunction& sign, int threads, std::size_t keep_offending) {
  if (D.cols() != static_cast<Eigen::Index>(Q.size()))
    throw std::invalid_argument("matrix columns must match word length");
  if (D.rows() != W.longest_length()) throw std::invalid_argument("matrix rows must equal l(w0)");
  auto subs = reduced_subwords(W, Q);
  SignatureReport rep;
  rep.total = subs.size();
  if (subs.empty()) return rep;
  std::vector<int> verdict(subs.size(), 0);
  parallel_for(subs.size(), threads, [&](std::size_t t) {
    Word w;
    for (int p : subs[t]) w.push_back(Q[p]);
    Rational det = determinant(select_columns(D, subs[t]));
    int s = sign(w) * sgn(det);
    verdict[t] = s;
  });
  for (std::size_t t = 0; t < subs.size(); ++t) {
    if (verdict[t] > 0) {
      ++rep.good;
      continue;
    }
    (verdict[t] < 0 ? rep.bad : rep.zero) += 1;
    if (rep.offending.size() < keep_offending) rep.offending.push_back(subs[t]);
  }
  return rep;
}

SignatureReport signature_report(int n, const RationalMatrix& D, const Word& Q, int threads) {
  const CoxeterSystem W = CoxeterSystem::A(n);
  return signature_report(W, D, Q, default_sign(W, Word()), threads);
}

}  // namespace subfan
