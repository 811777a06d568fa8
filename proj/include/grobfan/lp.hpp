#pragma once

// Exact rational linear programming.  A dense two-phase simplex over Q
// with Bland's anti-cycling rule: deterministic, no tolerances, immune
// to the degeneracy that plagues floating-point LP on cone systems.
// Free variables are split internally; callers hand over the natural
// "max c.x subject to A x <= b" form.

#include <cstdint>
#include <optional>
#include <vector>

#include "grobfan/rational.hpp"
#include "grobfan/vectors.hpp"

namespace grobfan {

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<Rational> point;  // a maximizer when Optimal
  Rational objective = 0;
};

LPResult lp_solve(const std::vector<std::vector<Rational>>& A,
                  const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

// A point x with <e,x> = 0 for all equations and <a,x> > 0 for all
// strict rows, or nullopt.  Encoded as: maximize t subject to
// <a,x> - t >= 0, t <= 1, equations pinned to zero; strictly feasible
// iff the optimum is positive.
std::optional<std::vector<Rational>> strictly_feasible(
    const std::vector<IntVec>& equations, const std::vector<IntVec>& strict);

// Monotone process-wide LP call counter (RunStats reads deltas of it).
std::uint64_t lp_invocation_count();

}  // namespace grobfan
