#pragma once

// Consistency checks between the formulas: dimension counts, tower and trace
// identities, independence of auxiliary choices. Each check records a name,
// a verdict and a short detail string.

#include <string>
#include <vector>

#include "equichar/formulas.hpp"

namespace equichar {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {});
  void append(const CheckReport& other);
  bool ok() const;
};

/// dim = 2 g_X, and the number of summands equals 2 g_Y + sum_Q (u_Q + 1) - 2
/// (2 g_Y for etale data).
CheckReport invariants_dimension(const CyclicCoverData& data, const GModuleDecomp& result);
/// dim = 2 g_X, dim V1 = 2 g_Y, V1 self-dual, C-forgetful image matches the
/// Z/p formula, restriction to C matches the layers of J_p(V1) + J_{p-1}(V2).
CheckReport invariants_dimension(const SemidirectCoverData& data, const SemidirectResult& result);

/// restrict_to_Hprime(H^1_dR(X)) against the formula for X -> X/H'.
Check tower_identity(const CyclicCoverData& data);
/// Upper T-layers of H^1_dR(X) against the T-layers for X/<sigma^{p^{n-1}}>.
Check trace_identity(const CyclicCoverData& data);
/// Jump bookkeeping across Y' -> Y (needs n >= 2).
Check jump_bookkeeping_identity(const CyclicCoverData& data);
/// #B_{X/Y'} = p #B_{X/Y} - (p-1) #B_{Y'/Y} (needs n >= 2).
Check branch_count_identity(const CyclicCoverData& data);
/// g_X computed over Y and over Y'.
Check subcover_genus_identity(const CyclicCoverData& data);
/// Same result for every admissible Q0.
Check q0_independence(const CyclicCoverData& data);

/// Closed form vs the generic pipeline on superelliptic data.
Check superelliptic_agreement(Int p, Int m, Int n);
/// p dim V1 + (p-1) dim V2 = (p^n - 1)(m - 1).
Check superelliptic_genus_identity(Int p, Int m, Int n);
/// Closed form unchanged under (c1, c2) -> (c1 + p^{n-1} t, c2 + m t), |t| <= radius.
Check bezout_independence(Int p, Int m, Int n, Int radius = 2);

/// Everything applicable to the input. Formula errors inside a check are
/// recorded as a failed check rather than thrown.
CheckReport validate_cyclic(const CyclicCoverData& data);
CheckReport validate_semidirect(const SemidirectCoverData& data);
CheckReport validate_superelliptic(Int p, Int m, Int n);

}  // namespace equichar
