#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subfan/complex.hpp"
#include "subfan/counting.hpp"
#include "subfan/rational.hpp"

namespace subfan {

// Columns of `rays` are the rays, one per position of the word.
struct Fan {
  SubwordComplex complex;
  RationalMatrix rays;  // (r - N) x r
  int dim() const { return static_cast<int>(rays.rows()); }
};

Fan build_fan(const CoxeterSystem& W, const Word& Q, const RationalMatrix& M);
Fan build_fan(const SubwordComplex& K, const RationalMatrix& M);

enum class Family { M213, M123, M12 };
Family parse_family(const std::string& name);
std::string family_name(Family f);
// Ray matrix (columns = rays) of the explicit families; m >= 3.
RationalMatrix builtin_rays(Family family, int m);
// Word and group the family realizes.
Word builtin_word(Family family, int m);
CoxeterSystem builtin_group(Family family);

// Merge the rows of the two folded letters in each copy of 213 and drop
// the third column of every triple.
RationalMatrix fold_to_b2(int m);

struct Wall {
  int facet_i = 0, facet_j = 0;  // indices into complex.facets, facet_i < facet_j
  int i = 0, j = 0;              // position leaving facet_i, position entering facet_j
  RationalVector coeffs;         // length r, supported on facet_i + {j}, coeffs(i) = 1
};

struct FanCheckReport {
  bool basis_ok = true;
  std::optional<int> singular_facet;
  bool flip_ok = true;
  std::optional<Wall> bad_wall;
  bool injective_ok = true;
  int reference_facet = 0;
  std::optional<int> overlapping_facet;
  std::optional<bool> signature_ok;  // when a Gale dual is supplied
  std::size_t walls = 0;
  bool complete() const { return basis_ok && flip_ok && injective_ok; }
};

// Negative-orthant facet when present, else the first facet.
int reference_facet(const Fan& fan);

std::vector<Wall> wall_relations(const Fan& fan, int threads = 1);

// (B), (F) and (I); with a Gale dual D also (S), accepting one global sign.
FanCheckReport check_complete(const Fan& fan, const RationalMatrix* D = nullptr, int threads = 1);
// Checks D * rays^T = 0 and complementary ranks.
bool is_gale_dual(const RationalMatrix& D, const RationalMatrix& rays);

class DegeneratePoint : public std::runtime_error {
 public:
  explicit DegeneratePoint(int facet)
      : std::runtime_error("point lies on the boundary of cone " + std::to_string(facet)), facet_(facet) {}
  int facet() const { return facet_; }

 private:
  int facet_;
};

// Counts maximal cones containing a generic point; precomputes inverses.
class CoveringOracle {
 public:
  explicit CoveringOracle(const Fan& fan);
  int covering_number(const RationalVector& point) const;

 private:
  std::vector<RationalMatrix> inverses_;
};
int covering_number(const Fan& fan, const RationalVector& point);

RationalMatrix gale_normalize(const RationalMatrix& M, Face facet);
// Removes the columns in `face` and the rows where the normalized identity
// block has its ones for those columns.
RationalMatrix restrict_to_link(const RationalMatrix& M_normalized, Face face, Face facet);

}  // namespace subfan
