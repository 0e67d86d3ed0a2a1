#include <stdexcept>

#include "subfan/counting.hpp"
#include "subfan/linalg.hpp"

namespace subfan {

namespace {

bool is213(const Word& c) { return c == Word{2, 1, 3}; }
bool is123(const Word& c) { return c == Word{1, 2, 3}; }

void require_supported(const Word& c) {
  if (!is213(c) && !is123(c)) throw std::invalid_argument("determinant tables exist for c = 213 and c = 123");
}

}  // namespace

std::vector<Word> table_expressions() {
  static const char* names[16] = {"123121", "121321", "231231", "231213", "213231", "213213",
                                  "123212", "212321", "321323", "323123", "132132", "132312",
                                  "312132", "312312", "232123", "321232"};
  std::vector<Word> out;
  for (const char* s : names) out.push_back(parse_word(s));
  return out;
}

int table_sign(const Word& c, const Word& expr) {
  require_supported(c);
  return sign_w0(3, expr);
}

Rational table_formula(const Word& c, const Word& expr, const std::array<int, 6>& t) {
  require_supported(c);
  const Rational a(t[0]), b(t[1]), C(t[2]), d(t[3]), e(t[4]), f(t[5]);
  const Rational half(1, 2);
  const std::string x = word_to_string(expr);
  // Factors shared by the middle blocks of both tables.
  const Rational k213 = 2 * (a + d) - b - C - e - f + 2;
  const Rational k132_213 = a + b + d + e - 2 * (C + f) - 2;
  const Rational k231_123 = 2 * (a + d) - b - C - e - f;
  const Rational k132_123 = a + b + d + e - 2 * (C + f);
  const bool c213 = is213(c);
  if (x == "123121" || x == "321323") return half * (a - d) * (a - f) * (b - e) * (d - f);
  if (x == "121321" || x == "323123") return -half * (a - C) * (a - f) * (b - e) * (C - f);
  if (x == "123212" || x == "321232") return (a - e) * (b - d) * (b - f) * (d - f);
  if (x == "212321" || x == "232123") return -(a - C) * (a - e) * (b - f) * (C - e);
  const Rational k1 = c213 ? k213 : k231_123;
  const Rational k2 = c213 ? k132_213 : k132_123;
  if (x == "231231" || x == "213213") return half * (a - d) * (b - e) * (C - f) * k1;
  if (x == "231213" || x == "213231") return -half * (a - d) * (b - f) * (C - e) * k1;
  if (x == "132132" || x == "312312") return -half * (a - d) * (b - e) * (C - f) * k2;
  if (x == "132312" || x == "312132") return half * (a - e) * (b - d) * (C - f) * k2;
  throw std::invalid_argument("not one of the 16 reduced expressions of w0: " + x);
}

std::vector<std::array<int, 6>> valid_table_tuples(const Word& c, const Word& expr, int m) {
  require_supported(c);
  if (expr.size() != 6) throw std::invalid_argument("expression must have 6 letters");
  auto idx = [&](int s) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] == s) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::array<int, 6>> out;
  std::array<int, 6> cur{};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 6) {
      out.push_back(cur);
      return;
    }
    for (int k = m; k >= 1; --k) {
      if (i > 0) {
        // Same copy only when the previous letter comes first inside c.
        bool same_ok = idx(expr[i - 1]) < idx(expr[i]);
        if (same_ok ? k > cur[i - 1] : k >= cur[i - 1]) continue;
      }
      cur[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> table_positions(const Word& c, const Word& expr, const std::array<int, 6>& t, int m) {
  std::vector<int> pos;
  for (int i = 0; i < 6; ++i) {
    int k = -1;
    for (std::size_t q = 0; q < c.size(); ++q)
      if (c[q] == expr[i]) k = static_cast<int>(q);
    if (k < 0 || t[i] < 1 || t[i] > m) throw std::invalid_argument("invalid tuple");
    pos.push_back((m - t[i]) * 3 + k);
  }
  for (int i = 1; i < 6; ++i)
    if (pos[i] <= pos[i - 1]) throw std::invalid_argument("tuple does not give increasing positions");
  return pos;
}

bool table3_formula_check(const Word& c, const Word& expr, const std::array<int, 6>& t, int m) {
  require_supported(c);
  auto D = counting_matrix(3, c, m);
  Rational det = determinant(select_columns(D.D, table_positions(c, expr, t, m)));
  return det == table_formula(c, expr, t);
}

}  // namespace subfan
