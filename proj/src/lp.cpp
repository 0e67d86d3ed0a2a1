#include "subfan/lp.hpp"

#include <stdexcept>

#include "subfan/linalg.hpp"

namespace subfan {

namespace {

struct Revised {
  const RationalMatrix& A;
  const RationalVector& b;
  Eigen::Index m, n;
  std::vector<Eigen::Index> basis;    // column per row; n + i denotes artificial i
  std::vector<Eigen::Index> where;    // row of a basic column, or -1
  RationalMatrix Binv;
  RationalVector xB;

  Revised(const RationalMatrix& a, const RationalVector& rhs)
      : A(a), b(rhs), m(a.rows()), n(a.cols()), basis(m), where(n + m, -1),
        Binv(RationalMatrix::Identity(m, m)), xB(rhs) {
    for (Eigen::Index i = 0; i < m; ++i) {
      basis[i] = n + i;
      where[n + i] = i;
    }
  }

  RationalVector column(Eigen::Index j) const {
    if (j < n) return Binv * A.col(j);
    return Binv.col(j - n);
  }

  RationalVector multipliers(const std::vector<Rational>& cost) const {
    RationalVector pi = RationalVector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (Eigen::Index k = 0; k < m; ++k)
        if (Binv(i, k) != 0) pi(k) += cb * Binv(i, k);
    }
    return pi;
  }

  void pivot(Eigen::Index r, Eigen::Index q, const RationalVector& u) {
    Rational inv = Rational(1) / u(r);
    for (Eigen::Index k = 0; k < m; ++k) Binv(r, k) *= inv;
    xB(r) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || u(i) == 0) continue;
      const Rational f = u(i);
      for (Eigen::Index k = 0; k < m; ++k)
        if (Binv(r, k) != 0) Binv(i, k) -= f * Binv(r, k);
      xB(i) -= f * xB(r);
    }
    where[basis[r]] = -1;
    basis[r] = q;
    where[q] = r;
  }

  // Returns false when unbounded; q receives the entering column in that case.
  bool optimize(const std::vector<Rational>& cost, Eigen::Index& q_out, RationalVector& u_out) {
    for (;;) {
      RationalVector pi = multipliers(cost);
      Eigen::Index q = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (where[j] >= 0) continue;
        Rational d = cost[j];
        for (Eigen::Index k = 0; k < m; ++k)
          if (pi(k) != 0 && A(k, j) != 0) d -= pi(k) * A(k, j);
        if (d < 0) {
          q = j;
          break;
        }
      }
      if (q < 0) return true;
      RationalVector u = column(q);
      Eigen::Index r = -1;
      Rational best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (u(i) <= 0) continue;
        Rational ratio = xB(i) / u(i);
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) {
        q_out = q;
        u_out = u;
        return false;
      }
      pivot(r, q, u);
    }
  }
};

}  // namespace

StandardResult simplex_standard(const RationalMatrix& A, const RationalVector& b,
                                const RationalVector& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("simplex: shape mismatch");
  for (Eigen::Index i = 0; i < m; ++i)
    if (b(i) < 0) throw std::invalid_argument("simplex: negative right-hand side");

  Revised s(A, b);
  StandardResult res;
  Eigen::Index q = -1;
  RationalVector u;

  std::vector<Rational> phase1(n + m, Rational(0));
  for (Eigen::Index i = 0; i < m; ++i) phase1[n + i] = 1;
  s.optimize(phase1, q, u);
  Rational infeas = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (s.basis[i] >= n) infeas += s.xB(i);
  if (infeas > 0) {
    res.status = LPStatus::Infeasible;
    res.y = s.multipliers(phase1);
    res.value = infeas;
    return res;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (s.basis[i] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (s.where[j] >= 0) continue;
      RationalVector col = s.column(j);
      if (col(i) != 0) {
        s.pivot(i, j, col);
        break;
      }
    }
  }

  std::vector<Rational> phase2(n + m, Rational(0));
  for (Eigen::Index j = 0; j < n; ++j) phase2[j] = c(j);
  bool bounded = s.optimize(phase2, q, u);
  res.x = RationalVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (s.basis[i] < n) res.x(s.basis[i]) = s.xB(i);
  res.y = s.multipliers(phase2);
  res.value = c.dot(res.x);
  if (!bounded) {
    res.status = LPStatus::Unbounded;
    res.ray = RationalVector::Zero(n);
    res.ray(q) = 1;
    for (Eigen::Index i = 0; i < m; ++i)
      if (s.basis[i] < n) res.ray(s.basis[i]) = -u(i);
    return res;
  }
  res.status = LPStatus::Optimal;
  return res;
}

LPOutcome lp_solve(const LinearProgram& lp) {
  const Eigen::Index m = lp.A.rows(), n = lp.A.cols();
  if (lp.b.size() != m || static_cast<Eigen::Index>(lp.sense.size()) != m ||
      lp.objective.size() != n || (!lp.free.empty() && static_cast<Eigen::Index>(lp.free.size()) != n))
    throw std::invalid_argument("lp_solve: inconsistent dimensions");

  auto is_free = [&](Eigen::Index j) { return !lp.free.empty() && lp.free[j]; };
  std::vector<Eigen::Index> plus(n), minus(n, -1), slack(m, -1);
  Eigen::Index cols = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    plus[j] = cols++;
    if (is_free(j)) minus[j] = cols++;
  }
  for (Eigen::Index i = 0; i < m; ++i)
    if (lp.sense[i] != Sense::EQ) slack[i] = cols++;

  RationalMatrix A = RationalMatrix::Zero(m, cols);
  RationalVector b(m), c = RationalVector::Zero(cols);
  std::vector<int> flip(m, 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    flip[i] = lp.b(i) < 0 ? -1 : 1;
    const Rational f(flip[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      A(i, plus[j]) = f * lp.A(i, j);
      if (minus[j] >= 0) A(i, minus[j]) = -f * lp.A(i, j);
    }
    if (lp.sense[i] == Sense::LE) A(i, slack[i]) = f;
    if (lp.sense[i] == Sense::GE) A(i, slack[i]) = -f;
    b(i) = f * lp.b(i);
  }
  const Rational osign = lp.maximize ? Rational(-1) : Rational(1);
  for (Eigen::Index j = 0; j < n; ++j) {
    c(plus[j]) = osign * lp.objective(j);
    if (minus[j] >= 0) c(minus[j]) = -osign * lp.objective(j);
  }

  StandardResult s = simplex_standard(A, b, c);
  LPOutcome out;
  out.status = s.status;
  auto unsplit = [&](const RationalVector& v) {
    RationalVector r(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      r(j) = v(plus[j]);
      if (minus[j] >= 0) r(j) -= v(minus[j]);
    }
    return r;
  };
  auto rows = [&](const RationalVector& y, const Rational& scale) {
    RationalVector r(m);
    for (Eigen::Index i = 0; i < m; ++i) r(i) = scale * Rational(flip[i]) * y(i);
    return r;
  };
  if (s.status == LPStatus::Infeasible) {
    out.farkas = rows(s.y, 1);
    return out;
  }
  out.x = unsplit(s.x);
  out.value = lp.objective.dot(out.x);
  out.dual = rows(s.y, osign);
  if (s.status == LPStatus::Unbounded) out.ray = unsplit(s.ray);
  return out;
}

bool verify_outcome(const LinearProgram& lp, const LPOutcome& out) {
  const Eigen::Index m = lp.A.rows(), n = lp.A.cols();
  auto is_free = [&](Eigen::Index j) { return !lp.free.empty() && lp.free[j]; };
  auto feasible_dir = [&](const RationalVector& x, const RationalVector& rhs) {
    RationalVector ax = lp.A * x;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (lp.sense[i] == Sense::LE && ax(i) > rhs(i)) return false;
      if (lp.sense[i] == Sense::GE && ax(i) < rhs(i)) return false;
      if (lp.sense[i] == Sense::EQ && ax(i) != rhs(i)) return false;
    }
    for (Eigen::Index j = 0; j < n; ++j)
      if (!is_free(j) && x(j) < 0) return false;
    return true;
  };
  switch (out.status) {
    case LPStatus::Optimal:
      return out.x.size() == n && feasible_dir(out.x, lp.b) && lp.objective.dot(out.x) == out.value;
    case LPStatus::Unbounded: {
      if (out.ray.size() != n || !feasible_dir(out.ray, RationalVector::Zero(m))) return false;
      if (!feasible_dir(out.x, lp.b)) return false;
      Rational gain = lp.objective.dot(out.ray);
      return lp.maximize ? gain > 0 : gain < 0;
    }
    case LPStatus::Infeasible: {
      const RationalVector& y = out.farkas;
      if (y.size() != m) return false;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (lp.sense[i] == Sense::LE && y(i) > 0) return false;
        if (lp.sense[i] == Sense::GE && y(i) < 0) return false;
      }
      RationalVector ya = lp.A.transpose() * y;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (is_free(j) ? ya(j) != 0 : ya(j) > 0) return false;
      }
      return y.dot(lp.b) > 0;
    }
  }
  return false;
}

StrictResult strict_feasibility(const RationalMatrix& rows) {
  const Eigen::Index k = rows.rows(), v = rows.cols();
  StrictResult res;
  if (k == 0) {
    res.feasible = true;
    res.point = RationalVector::Zero(v);
    return res;
  }
  RationalMatrix A = RationalMatrix::Zero(v + 1, k + 1);
  A.topLeftCorner(v, k) = rows.transpose();
  A.row(v).setOnes();
  RationalVector b = RationalVector::Zero(v + 1);
  b(v) = 1;
  RationalVector c = RationalVector::Zero(k + 1);
  c(k) = 1;
  StandardResult s = simplex_standard(A, b, c);
  if (s.status != LPStatus::Optimal) throw std::logic_error("strict_feasibility: bounded LP reported otherwise");
  if (s.value == 0) {
    res.feasible = false;
    res.witness = primitive(RationalVector(s.x.head(k)));
    return res;
  }
  res.feasible = true;
  res.point = primitive(RationalVector(-s.y.head(v)));
  return res;
}

bool verify_strict(const RationalMatrix& rows, const StrictResult& res) {
  if (res.feasible) {
    if (res.point.size() != rows.cols()) return false;
    RationalVector val = rows * res.point;
    for (Eigen::Index i = 0; i < val.size(); ++i)
      if (val(i) <= 0) return false;
    return true;
  }
  if (res.witness.size() != rows.rows()) return false;
  bool nonzero = false;
  for (Eigen::Index i = 0; i < res.witness.size(); ++i) {
    if (res.witness(i) < 0) return false;
    if (res.witness(i) != 0) nonzero = true;
  }
  if (!nonzero) return false;
  RationalVector comb = rows.transpose() * res.witness;
  for (Eigen::Index j = 0; j < comb.size(); ++j)
    if (comb(j) != 0) return false;
  return true;
}

}  // namespace subfan
