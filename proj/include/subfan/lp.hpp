#pragma once

#include <vector>

#include "subfan/rational.hpp"

namespace subfan {

enum class Sense { LE, EQ, GE };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LinearProgram {
  RationalMatrix A;
  RationalVector b;
  std::vector<Sense> sense;   // one per row
  RationalVector objective;
  bool maximize = false;
  std::vector<bool> free;     // per variable; empty means all x >= 0
};

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  RationalVector x;        // optimal point
  Rational value;          // optimal objective
  RationalVector dual;     // row multipliers at the optimum
  RationalVector farkas;   // row multipliers proving infeasibility
  RationalVector ray;      // improving direction when unbounded
};

// Two-phase revised simplex with Bland's rule, exact arithmetic.
LPOutcome lp_solve(const LinearProgram& lp);

// Replays the primal point, Farkas combination or ray against the program.
bool verify_outcome(const LinearProgram& lp, const LPOutcome& out);

// Standard form: min c.x, A x = b, x >= 0, b >= 0.
struct StandardResult {
  LPStatus status = LPStatus::Infeasible;
  RationalVector x;
  RationalVector y;  // simplex multipliers c_B B^-1 (phase 1 multipliers when infeasible)
  RationalVector ray;
  Rational value;
};
StandardResult simplex_standard(const RationalMatrix& A, const RationalVector& b,
                                const RationalVector& c);

struct StrictResult {
  bool feasible = false;
  RationalVector point;    // rows * point > 0 componentwise
  RationalVector witness;  // y >= 0, y != 0, rows^T y = 0
};

// Decides whether {h : rows * h > 0} is nonempty.
StrictResult strict_feasibility(const RationalMatrix& rows);
bool verify_strict(const RationalMatrix& rows, const StrictResult& res);

}  // namespace subfan
