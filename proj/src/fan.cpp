#include "subfan/fan.hpp"

#include <stdexcept>
#include <unordered_map>

#include "subfan/linalg.hpp"
#include "subfan/lp.hpp"
#include "subfan/parallel.hpp"

namespace subfan {

Fan build_fan(const SubwordComplex& K, const RationalMatrix& M) {
  const int r = static_cast<int>(K.word.size());
  const int d = r - K.group.longest_length();
  if (M.cols() != r || M.rows() != d)
    throw std::invalid_argument("ray matrix must be " + std::to_string(d) + " x " + std::to_string(r));
  return Fan{K, M};
}

Fan build_fan(const CoxeterSystem& W, const Word& Q, const RationalMatrix& M) {
  return build_fan(subword_complex(W, Q), M);
}

Family parse_family(const std::string& name) {
  if (name == "M_213" || name == "M213") return Family::M213;
  if (name == "M_123" || name == "M123") return Family::M123;
  if (name == "M_12" || name == "M12") return Family::M12;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::M213: return "M_213";
    case Family::M123: return "M_123";
    case Family::M12: return "M_12";
  }
  return "";
}

namespace {

Rational S(int i) { return Rational(i) * i; }
Rational T(int i) { return Rational(i) * (i + 1) / 2; }

std::vector<std::vector<Rational>> block213(int i) {
  return {{S(i + 1), -T(i), -T(i)},
          {2 * T(i), -T(i - 1) + 1, -T(i)},
          {2 * T(i), -T(i), -T(i - 1) + 1},
          {-S(i + 1) + 1, T(i), T(i)},
          {-2 * T(i), T(i - 1), T(i)},
          {-2 * T(i), T(i), T(i - 1)}};
}

std::vector<std::vector<Rational>> block123(int i) {
  std::vector<std::vector<Rational>> B = {{T(i), -2 * T(i), T(i)},
                                          {T(i + 1), -2 * T(i), T(i - 1)},
                                          {T(i), -S(i) + 1, T(i - 1)},
                                          {-T(i), 2 * T(i), -T(i) + 1},
                                          {-T(i + 1) + 1, 2 * T(i), -T(i - 1)},
                                          {-T(i), S(i), -T(i - 1)}};
  if (i == 1) {
    const int last[6] = {0, 1, 1, 1, -1, -1};
    for (int r = 0; r < 6; ++r) B[r][2] = last[r];
  }
  return B;
}

std::vector<std::vector<Rational>> block12(int i) {
  return {{S(i + 1), -T(i)}, {4 * T(i), -S(i) + 1}, {-S(i + 1) + 1, T(i)}, {-4 * T(i), S(i)}};
}

}  // namespace

RationalMatrix builtin_rays(Family family, int m) {
  if (m < 3) throw std::invalid_argument("builtin families need m >= 3");
  const int n = family == Family::M12 ? 2 : 3;
  const int N = family == Family::M12 ? 4 : 6;
  const int r = n * m, d = r - N;
  RationalMatrix Mt = RationalMatrix::Zero(r, d);  // row p is the ray at position p
  const int identity_rows = family == Family::M123 ? d - 1 : d;
  for (int k = 0; k < identity_rows; ++k) Mt(k, k) = -1;
  for (int b = 0; b < m - 2; ++b) {
    const int i = m - 2 - b;
    auto B = family == Family::M213 ? block213(i) : family == Family::M123 ? block123(i) : block12(i);
    for (int row = 0; row < N; ++row)
      for (int k = 0; k < n; ++k) Mt(identity_rows + row, n * b + k) = B[row][k];
  }
  if (family == Family::M123) Mt(r - 1, d - 1) = -1;
  return Mt.transpose();
}

Word builtin_word(Family family, int m) {
  switch (family) {
    case Family::M213: return power({2, 1, 3}, m);
    case Family::M123: return power({1, 2, 3}, m);
    case Family::M12: return power({1, 2}, m);
  }
  return {};
}

CoxeterSystem builtin_group(Family family) {
  return family == Family::M12 ? CoxeterSystem::B(2) : CoxeterSystem::A(3);
}

RationalMatrix fold_to_b2(int m) {
  RationalMatrix Mt = builtin_rays(Family::M213, m).transpose();
  const int d = 2 * m - 4;
  RationalMatrix out = RationalMatrix::Zero(2 * m, d);
  for (int t = 0; t < m; ++t) {
    for (int col = 0, k = 0; col < Mt.cols(); ++col) {
      if (col % 3 == 2) continue;
      out(2 * t, k) = Mt(3 * t, col);
      out(2 * t + 1, k) = Mt(3 * t + 1, col) + Mt(3 * t + 2, col);
      ++k;
    }
  }
  return out.transpose();
}

int reference_facet(const Fan& fan) {
  const auto& facets = fan.complex.facets;
  for (std::size_t t = 0; t < facets.size(); ++t) {
    std::vector<char> used(fan.dim(), 0);
    bool ok = true;
    for (int p : face_positions(facets[t])) {
      int hit = -1;
      for (Eigen::Index row = 0; row < fan.rays.rows() && ok; ++row) {
        const Rational& v = fan.rays(row, p);
        if (v == 0) continue;
        if (v != -1 || hit >= 0) ok = false;
        hit = static_cast<int>(row);
      }
      if (!ok || hit < 0 || used[hit]) {
        ok = false;
        break;
      }
      used[hit] = 1;
    }
    if (ok) return static_cast<int>(t);
  }
  return 0;
}

namespace {

struct Bases {
  std::vector<std::optional<RationalMatrix>> inv;
  std::unordered_map<Face, int> index;
};

Bases facet_bases(const Fan& fan, int threads) {
  const auto& facets = fan.complex.facets;
  Bases b;
  b.inv.resize(facets.size());
  for (std::size_t t = 0; t < facets.size(); ++t) b.index[facets[t]] = static_cast<int>(t);
  parallel_for(facets.size(), threads, [&](std::size_t t) {
    b.inv[t] = inverse(select_columns(fan.rays, face_positions(facets[t])));
  });
  return b;
}

std::vector<Wall> walls_from(const Fan& fan, const Bases& b, int threads) {
  const auto& K = fan.complex;
  std::vector<std::vector<Wall>> per(K.facets.size());
  parallel_for(K.facets.size(), threads, [&](std::size_t t) {
    auto pos = face_positions(K.facets[t]);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      Flip fl = flip(K, K.facets[t], pos[k]);
      int u = b.index.at(fl.facet);
      if (u < static_cast<int>(t)) continue;
      RationalVector y = (*b.inv[t]) * fan.rays.col(fl.position);
      Wall w;
      w.facet_i = static_cast<int>(t);
      w.facet_j = u;
      w.i = pos[k];
      w.j = fl.position;
      w.coeffs = RationalVector::Zero(fan.rays.cols());
      if (y(k) == 0) {
        w.coeffs(w.i) = 1;
      } else {
        for (std::size_t q = 0; q < pos.size(); ++q) w.coeffs(pos[q]) = y(q) / y(k);
        w.coeffs(w.j) = Rational(-1) / y(k);
      }
      per[t].push_back(std::move(w));
    }
  });
  std::vector<Wall> out;
  for (auto& v : per)
    for (auto& w : v) out.push_back(std::move(w));
  return out;
}

// True when cone J meets the interior of the reference cone.
bool overlaps(const RationalMatrix& ref_inv, const RationalMatrix& MJ) {
  RationalMatrix A = ref_inv * MJ;
  for (Eigen::Index row = 0; row < A.rows(); ++row) {
    bool positive = false;
    for (Eigen::Index k = 0; k < A.cols(); ++k) positive = positive || A(row, k) > 0;
    if (!positive) return false;
  }
  LinearProgram lp;
  lp.A = A;
  lp.b = RationalVector::Ones(A.rows());
  lp.sense.assign(A.rows(), Sense::GE);
  lp.objective = RationalVector::Zero(A.cols());
  return lp_solve(lp).status != LPStatus::Infeasible;
}

}  // namespace

std::vector<Wall> wall_relations(const Fan& fan, int threads) {
  Bases b = facet_bases(fan, threads);
  for (std::size_t t = 0; t < b.inv.size(); ++t)
    if (!b.inv[t]) throw std::invalid_argument("facet " + std::to_string(t) + " does not span a full cone");
  return walls_from(fan, b, threads);
}

bool is_gale_dual(const RationalMatrix& D, const RationalMatrix& rays) {
  if (D.cols() != rays.cols()) return false;
  if (D.rows() + rays.rows() != rays.cols()) return false;
  if (!(D * rays.transpose()).isZero()) return false;
  return rank(D) == D.rows() && rank(rays) == rays.rows();
}

FanCheckReport check_complete(const Fan& fan, const RationalMatrix* D, int threads) {
  FanCheckReport rep;
  const auto& K = fan.complex;
  if (D) {
    if (!is_gale_dual(*D, fan.rays)) throw std::invalid_argument("supplied matrix is not a Gale dual of the rays");
    Word c(K.word.begin(), K.word.begin() + std::min<std::size_t>(K.group.rank, K.word.size()));
    if (!is_coxeter_element(K.group, c)) {
      c.clear();
      for (int s = 1; s <= K.group.rank; ++s) c.push_back(s);
    }
    auto srep = signature_report(K.group, *D, K.word, default_sign(K.group, c), threads);
    rep.signature_ok = srep.signature_up_to_sign();
  }
  Bases b = facet_bases(fan, threads);
  for (std::size_t t = 0; t < b.inv.size(); ++t) {
    if (!b.inv[t]) {
      rep.basis_ok = false;
      rep.singular_facet = static_cast<int>(t);
      return rep;
    }
  }
  auto walls = walls_from(fan, b, threads);
  rep.walls = walls.size();
  for (const auto& w : walls) {
    if (w.coeffs(w.j) <= 0) {
      rep.flip_ok = false;
      rep.bad_wall = w;
      break;
    }
  }
  rep.reference_facet = reference_facet(fan);
  const RationalMatrix& ref_inv = *b.inv[rep.reference_facet];
  std::vector<char> hit(K.facets.size(), 0);
  parallel_for(K.facets.size(), threads, [&](std::size_t t) {
    if (static_cast<int>(t) == rep.reference_facet) return;
    hit[t] = overlaps(ref_inv, select_columns(fan.rays, face_positions(K.facets[t])));
  });
  for (std::size_t t = 0; t < hit.size(); ++t) {
    if (hit[t]) {
      rep.injective_ok = false;
      rep.overlapping_facet = static_cast<int>(t);
      break;
    }
  }
  return rep;
}

CoveringOracle::CoveringOracle(const Fan& fan) {
  for (Face F : fan.complex.facets) {
    auto inv = inverse(select_columns(fan.rays, face_positions(F)));
    if (!inv) throw std::invalid_argument("covering number needs full-dimensional cones");
    inverses_.push_back(*inv);
  }
}

int CoveringOracle::covering_number(const RationalVector& point) const {
  int count = 0;
  for (std::size_t t = 0; t < inverses_.size(); ++t) {
    RationalVector mu = inverses_[t] * point;
    bool nonneg = true, positive = true;
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
      if (mu(k) < 0) nonneg = false;
      if (mu(k) <= 0) positive = false;
    }
    if (positive) ++count;
    else if (nonneg) throw DegeneratePoint(static_cast<int>(t));
  }
  return count;
}

int covering_number(const Fan& fan, const RationalVector& point) {
  return CoveringOracle(fan).covering_number(point);
}

RationalMatrix gale_normalize(const RationalMatrix& M, Face facet) {
  auto inv = inverse(select_columns(M, face_positions(facet)));
  if (!inv) throw std::invalid_argument("gale_normalize: singular facet submatrix");
  return (*inv) * M;
}

RationalMatrix restrict_to_link(const RationalMatrix& Mn, Face face, Face facet) {
  if ((face & facet) != face) throw std::invalid_argument("face is not contained in the facet");
  auto fpos = face_positions(facet);
  std::vector<int> keep_rows, keep_cols;
  for (std::size_t t = 0; t < fpos.size(); ++t)
    if (!((face >> fpos[t]) & 1)) keep_rows.push_back(static_cast<int>(t));
  for (int p = 0; p < Mn.cols(); ++p)
    if (!((face >> p) & 1)) keep_cols.push_back(p);
  RationalMatrix out(static_cast<Eigen::Index>(keep_rows.size()), static_cast<Eigen::Index>(keep_cols.size()));
  for (std::size_t a = 0; a < keep_rows.size(); ++a)
    for (std::size_t b = 0; b < keep_cols.size(); ++b)
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = Mn(keep_rows[a], keep_cols[b]);
  return out;
}

}  // namespace subfan
