#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apnlab/bipoly.hpp"
#include "apnlab/intmath.hpp"

namespace apnlab {

/// One audited inequality instance. Both sides are exact integers (128-bit,
/// plenty for i <= 20); no floating point anywhere.
struct AuditReport {
  std::string formula_id;
  long long i = 0, ell = 0;
  int128 lhs = 0, rhs = 0;
  char relation = '<';  // lhs <relation> rhs is the claim
  bool pass = false;
  bool applicable = true;  // false when a precondition excludes the instance
  std::string note;
};

/// Parts (1) and (2) of the small technical bound: 2^(i-1)+1-ell > 2 and
/// (ell-3)/2^(i+1) < 1/4, the latter cross-multiplied into integers.
/// Preconditions (i > 2, ell | 2^i - 1, ell != 2^i - 1) are reported, not
/// faulted.
std::vector<AuditReport> audit_technical(int i, long long ell);

/// Equal-degree two-factor split: the singularity-weighted bound must stay
/// strictly below (2^(i-1) ell - 1)^2, plus the reduced form 2^(i-1) > ell-1.
std::vector<AuditReport> audit_split2(int i, long long ell);

/// deg(g)^2 strictly exceeds the table bound on the sum of squared
/// multiplicities. measured_sum, when supplied, is additionally checked
/// against the bound (measured <= bound).
std::vector<AuditReport> audit_square(int i, long long ell,
                                      std::optional<int128> measured_sum = std::nullopt);

/// The r-free final display of the many-factor argument.
AuditReport audit_main_inequality(int i, long long ell);

/// sum_{i<j} x_i x_j <= (n-1)/(2n) * N^2 for nonnegative values summing to N,
/// verified by cross-multiplication.
AuditReport audit_maxofmany(const std::vector<long long>& values);

/// Full sweep: every proper divisor ell >= 3 of 2^i - 1* for i <= max_i must
/// pass all strict audits; the boundary ell = 2^i - 1 must fail them.
struct AuditSweep {
  std::vector<AuditReport> rows;
  bool all_proper_pass = true;      // strict audits hold off the boundary
  bool all_boundary_fail = true;    // and fail on it
};
AuditSweep audit_sweep(int max_i);

// ---------------------------------------------------------------------------
// intersection numbers

struct IntersectionNumber {
  bool infinite = false;  // the curves share a component through the point
  long long value = 0;
};

/// Local intersection multiplicity of two affine plane curves at
/// (px, py), by the standard reduction: restrict to the line y = const,
/// cancel leading x-terms, split off y-factors, recurse.
IntersectionNumber fulton_intersection(const BiPoly& f, const BiPoly& g,
                                       std::uint32_t px, std::uint32_t py);

/// Sum of I(P, f, g) over every projective point with coordinates in the
/// coefficient field (affine points plus the line at infinity via chart
/// switches). Equals deg f * deg g whenever the curves share no component
/// and all intersection points split in this field.
struct BezoutSum {
  bool shared_component = false;
  long long affine = 0;
  long long at_infinity = 0;
  long long total() const { return affine + at_infinity; }
};
BezoutSum bezout_point_sum(const BiPoly& f, const BiPoly& g);

}  // namespace apnlab
