#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subfan/complex.hpp"
#include "subfan/coxeter.hpp"
#include "subfan/rational.hpp"

namespace subfan {

struct Embedding {
  Word source;
  Word c;
  int m = 1;
  std::vector<int> positions;  // 0-based, strictly increasing, into c^m
};

// Streams letter-preserving increasing maps Q -> c^m in lexicographic order.
class EmbeddingEnumerator {
 public:
  EmbeddingEnumerator(Word Q, Word c, int m);
  std::optional<Embedding> next();

 private:
  Word Q_, c_, target_;
  int m_;
  std::vector<int> cur_;
  bool started_ = false, done_ = false;
  bool fill_from(std::size_t i, int start);
};
std::vector<Embedding> enumerate_embeddings(const Word& Q, const Word& c, int m);

// Rows of the counting matrix: inversion sequence of w0(c). When that word has
// sign -1 the first two rows are exchanged.
std::vector<Root> root_order(int n, const Word& c);

struct CountingMatrix {
  int rank = 0;
  Word c;
  int m = 0;        // power when the target is c^m, 0 otherwise
  Word target;
  std::vector<Root> roots;
  RationalMatrix D;
};

CountingMatrix counting_matrix(int n, const Word& c, int m);
// Counting inside an arbitrary word P using the parabolic elements of c.
CountingMatrix counting_matrix_in(int n, const Word& c, const Word& P);

// Closed forms for A1, A2 with c = 12, A3 with c = 213 and c = 123.
CountingMatrix closed_form_counting(int n, const Word& c, int m);
bool has_closed_form(int n, const Word& c);

RationalMatrix restricted_matrix(const CountingMatrix& D, const Embedding& phi);

struct ParamSet {
  int m = 0;
  std::vector<Rational> a, b, c;  // index 1..m, entry 0 unused
  static ParamSet identity(int m);
};

RationalMatrix param_counting(const Word& c, const ParamSet& params);

struct InequalityCheck {
  bool ok = true;
  std::vector<std::string> violated;
};
InequalityCheck check_signature_inequalities(const Word& c, const ParamSet& params);

using SignFunction = std::function<int(const Word&)>;
// Multi-permutation sign in type A; braid walk from w0(c) otherwise.
SignFunction default_sign(const CoxeterSystem& W, const Word& c);

struct SignatureReport {
  std::size_t good = 0, bad = 0, zero = 0, total = 0;
  std::vector<std::vector<int>> offending;  // positions of bad or zero subwords
  bool signature() const { return total > 0 && bad == 0 && zero == 0; }
  // All determinants nonzero with one common wrong sign.
  bool signature_up_to_sign() const { return total > 0 && zero == 0 && (bad == 0 || good == 0); }
};

SignatureReport signature_report(const CoxeterSystem& W, const RationalMatrix& D, const Word& Q,
                                 const SignFunction& sign, int threads = 1,
                                 std::size_t keep_offending = 32);
SignatureReport signature_report(int n, const RationalMatrix& D, const Word& Q, int threads = 1);

// Determinant tables for A3 with c = 213 or c = 123. Tuples (a..f) are the
// copies of c used by each letter, counted from the right.
std::vector<Word> table_expressions();
Rational table_formula(const Word& c, const Word& expr, const std::array<int, 6>& t);
int table_sign(const Word& c, const Word& expr);
std::vector<std::array<int, 6>> valid_table_tuples(const Word& c, const Word& expr, int m);
std::vector<int> table_positions(const Word& c, const Word& expr, const std::array<int, 6>& t, int m);
bool table3_formula_check(const Word& c, const Word& expr, const std::array<int, 6>& t, int m);

struct A4Builtins {
  RationalMatrix sig92, sig113;    // 10 x 18, 10 x 22
  RationalMatrix rays92, rays113;  // 18 x 8, 22 x 12; row j is the ray at position j
};
const A4Builtins& a4_builtin_matrices();

}  // namespace subfan
