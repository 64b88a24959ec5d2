#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apnlab/curves.hpp"

namespace apnlab {

/// Decomposition t = 2^i * ell + 1 with odd ell >= 3, and the gcd case that
/// drives which multiplicity table applies.
struct ExponentProfile {
  long long t = 0;
  int i = 0;
  long long ell = 0;
  long long d = 0;  // gcd(ell, 2^i - 1)
  enum class Case { d_one, d_mid, d_ell } gcd_case = Case::d_one;
  bool kasami_boundary = false;  // ell == 2^i - 1, i.e. t = 4^i - 2^i + 1
  int root_field_degree = 0;     // order of 2 mod ell
  int working_field_degree = 0;  // lcm(root_field_degree, i)

  std::string case_name() const {
    switch (gcd_case) {
      case Case::d_one: return "d=1";
      case Case::d_mid: return "1<d<ell";
      default: return "d=ell";
    }
  }
};

/// nullopt for Gold exponents (odd part of t-1 is 1: no profile exists).
/// Throws on even t or t < 3.
std::optional<ExponentProfile> exponent_profile(long long t);

enum class PointType { I, IIA, IIB, IIIA, IIIB };
std::string point_type_name(PointType ty);
bool is_type_a(PointType ty);

/// One singular point (alpha, beta) of f_t with its closed-form expansion
/// coefficients and the multiplicities measured by the shift oracle.
struct SingularPoint {
  std::uint32_t alpha = 0, beta = 0, lambda = 0;
  PointType type = PointType::I;
  std::uint32_t F0 = 0;            // alpha^t + beta^t + lambda^t + 1
  std::uint32_t F1x = 0, F1y = 0;  // linear coefficients
  std::uint32_t F2ix = 0, F2iy = 0;          // x^(2^i), y^(2^i) coefficients
  std::uint32_t F2i1x = 0, F2i1y = 0, F2i1m = 0;  // degree 2^i+1: pure + mixed
  bool f2i_zero = false;
  int m_f = 0, m_g = 0, m_w = 0;
};

struct SingularAtlas {
  ExponentProfile prof;
  const FieldSpec* field = nullptr;  // working field GF(2^M)
  CurveFamily fam;                   // over GF(2)
  BiPoly f, g, w;                    // lifted to the working field
  std::vector<SingularPoint> points;
  long long count_type1 = 0, count_type2 = 0, count_type3 = 0;
  long long type3_bound = 0;  // (ell-1)(ell-3)
};

/// Enumerates all singular points of f_t: both coordinates run over the
/// ell-th roots of unity and the point survives iff lambda = alpha+beta+1 is
/// one too. Classification and closed forms are filled per point; the
/// multiplicities come from the independent shift oracle.
SingularAtlas enumerate_singular(long long t, int max_root_field = 24);

/// Least total degree with a nonzero homogeneous component of p shifted to
/// (alpha, beta); 0 when the point is not on the curve. Works directly from
/// p's terms with Lucas-parity binomials, independent of any closed form.
int multiplicity_oracle(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta);

/// The four displayed expansion coefficients evaluated exactly over F.
struct FormulaExpansion {
  BiPoly F0, F1, F2i, F2i1;
};
FormulaExpansion formula_expansion(const ExponentProfile& prof, const FieldSpec& F,
                                   std::uint32_t alpha, std::uint32_t beta);

/// Per-point check of the first-coefficient criterion: F_(2^i) vanishes
/// exactly at Type I / II.A / III.A points and at those III.B points where
/// alpha/beta and beta/lambda lie in GF(2^i) (possible only when
/// 1 < gcd(ell, 2^i-1) < ell).
struct FirstCoefReport {
  long long t = 0;
  long long checked = 0;
  long long vanishing = 0;  // points with F_(2^i) = 0
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
FirstCoefReport verify_first_coef(long long t, int max_root_field = 24);

/// For every ell-th root alpha != 1 there is a valid beta (root, != 1,
/// != alpha) with (alpha+beta+1)^ell != 1; also checks the underlying
/// fixed-point-free map and the per-alpha bound of ell-3 on the complement.
struct BetaExistsReport {
  long long ell = 0;
  bool ok = false;
  long long max_valid_per_alpha = 0;  // choices with lambda^ell = 1
};
BetaExistsReport verify_beta_exists(long long ell, int max_root_field = 24);

/// Lowest nonzero homogeneous component of p at P with its linear-factor
/// structure. When the cone has the pure shape (Ax + By)^(2^i), A and B are
/// recovered from the two end coefficients.
struct TangentCone {
  int degree = 0;
  BiPoly form;
  int distinct_linear_count = 0;
  bool pure_power = false;  // only x^m and y^m monomials present
  std::uint32_t A = 0, B = 0;
};
TangentCone tangent_cone(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta);

}  // namespace apnlab
