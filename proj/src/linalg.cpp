#include "subfan/linalg.hpp"

namespace subfan {

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<Integer> a(n, n);
  Integer scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j) l = lcm_int(l, denominator_of(m(i, j)));
    scale *= l;
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = numerator_of(m(i, j)) * (l / denominator_of(m(i, j)));
  }
  return Rational(bareiss_determinant(a), scale);
}

RationalVector primitive(const RationalVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm_int(l, denominator_of(v(i)));
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer x = numerator_of(v(i)) * (l / denominator_of(v(i)));
    g = boost::multiprecision::gcd(g, x);
  }
  if (g == 0) return v;
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * Rational(l) / Rational(g);
  return out;
}

RationalMatrix select_columns(const RationalMatrix& m, const std::vector<int>& cols) {
  RationalMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] < 0 || cols[k] >= m.cols()) throw std::out_of_range("column index");
    out.col(static_cast<Eigen::Index>(k)) = m.col(cols[k]);
  }
  return out;
}

}  // namespace subfan
