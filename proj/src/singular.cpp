#include "apnlab/singular.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "apnlab/intmath.hpp"

namespace apnlab {

std::optional<ExponentProfile> exponent_profile(long long t) {
  if (t < 3 || t % 2 == 0)
    throw std::invalid_argument("t must be odd and >= 3");
  ExponentProfile p;
  p.t = t;
  p.i = split_two_adic(t - 1, p.ell);
  if (p.ell == 1) return std::nullopt;  // Gold: t = 2^i + 1
  long long pow2i_minus1 = (1LL << p.i) - 1;
  p.d = std::gcd(p.ell, pow2i_minus1);
  p.gcd_case = (p.d == 1)       ? ExponentProfile::Case::d_one
               : (p.d == p.ell) ? ExponentProfile::Case::d_ell
                                : ExponentProfile::Case::d_mid;
  p.kasami_boundary = (p.ell == pow2i_minus1);
  p.root_field_degree = order_of_two_mod(p.ell);
  p.working_field_degree = static_cast<int>(std::lcm(p.root_field_degree, p.i));
  return p;
}

std::string point_type_name(PointType ty) {
  switch (ty) {
    case PointType::I: return "I";
    case PointType::IIA: return "II.A";
    case PointType::IIB: return "II.B";
    case PointType::IIIA: return "III.A";
    default: return "III.B";
  }
}

bool is_type_a(PointType ty) {
  return ty == PointType::I || ty == PointType::IIA || ty == PointType::IIIA;
}

int multiplicity_oracle(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta) {
  if (p.is_zero())
    throw std::invalid_argument("multiplicity of the zero polynomial");
  for (int m = 0; m <= p.degree(); ++m)
    if (!shift_component(p, alpha, beta, m).is_zero()) return m;
  throw std::logic_error("nonzero polynomial with all components zero");
}

FormulaExpansion formula_expansion(const ExponentProfile& prof, const FieldSpec& F,
                                   std::uint32_t alpha, std::uint32_t beta) {
  const long long t = prof.t;
  const int e = 1 << prof.i;  // 2^i
  const std::uint32_t lambda = F.add(F.add(alpha, beta), 1);

  auto powd = [&](std::uint32_t a, long long d) { return F.pow(a, d); };

  FormulaExpansion out{BiPoly(F), BiPoly(F), BiPoly(F), BiPoly(F)};
  out.F0.add_term(0, 0, powd(alpha, t) ^ powd(beta, t) ^ powd(lambda, t) ^ 1u);
  out.F1.add_term(1, 0, powd(alpha, t - 1) ^ powd(lambda, t - 1));
  out.F1.add_term(0, 1, powd(beta, t - 1) ^ powd(lambda, t - 1));
  out.F2i.add_term(e, 0, powd(alpha, t - e) ^ powd(lambda, t - e));
  out.F2i.add_term(0, e, powd(beta, t - e) ^ powd(lambda, t - e));
  const std::uint32_t lam = powd(lambda, t - e - 1);
  out.F2i1.add_term(e + 1, 0, powd(alpha, t - e - 1) ^ lam);
  out.F2i1.add_term(0, e + 1, powd(beta, t - e - 1) ^ lam);
  out.F2i1.add_term(e, 1, lam);
  out.F2i1.add_term(1, e, lam);
  return out;
}

namespace {

PointType classify(const FieldSpec& F, std::uint32_t a, std::uint32_t b, int i) {
  const bool sub = F.in_subfield(a, i) && F.in_subfield(b, i);
  if (a == 1 && b == 1) return PointType::I;
  if (a == 1 || b == 1 || a == b) return sub ? PointType::IIA : PointType::IIB;
  return sub ? PointType::IIIA : PointType::IIIB;
}

}  // namespace

SingularAtlas enumerate_singular(long long t, int max_root_field) {
  auto prof = exponent_profile(t);
  if (!prof)
    throw std::invalid_argument("Gold exponent: no profile, no singular atlas");
  if (prof->working_field_degree > max_root_field)
    throw CeilingError("working field GF(2^" +
                       std::to_string(prof->working_field_degree) +
                       ") exceeds the root-field ceiling");

  const FieldSpec& F = FieldSpec::get(prof->working_field_degree);
  CurveFamily fam = build_curves(t);
  BiPoly fF = fam.f.lifted(F), gF = fam.g.lifted(F), wF = fam.w.lifted(F);
  SingularAtlas atlas{*prof,          &F, std::move(fam), std::move(fF),
                      std::move(gF),  std::move(wF), {}, 0, 0, 0,
                      (prof->ell - 1) * (prof->ell - 3)};

  // The ell-th roots live in the subfield GF(2^root_field_degree); find them
  // inside the working field directly.
  std::uint64_t step = F.group_order() / static_cast<std::uint64_t>(prof->ell);
  const std::uint32_t h = F.pow(F.generator(), step);
  std::vector<std::uint32_t> roots;
  std::uint32_t v = 1;
  for (long long k = 0; k < prof->ell; ++k) {
    roots.push_back(v);
    v = F.mul(v, h);
  }
  std::sort(roots.begin(), roots.end());

  std::vector<bool> is_root(F.order(), false);
  for (auto r : roots) is_root[r] = true;

  for (auto a : roots) {
    for (auto b : roots) {
      const std::uint32_t lambda = a ^ b ^ 1u;
      if (lambda >= F.order() || !is_root[lambda]) continue;

      SingularPoint pt;
      pt.alpha = a;
      pt.beta = b;
      pt.lambda = lambda;
      pt.type = classify(F, a, b, prof->i);

      FormulaExpansion fx = formula_expansion(*prof, F, a, b);
      const int e = 1 << prof->i;
      pt.F0 = fx.F0.coeff(0, 0);
      pt.F1x = fx.F1.coeff(1, 0);
      pt.F1y = fx.F1.coeff(0, 1);
      pt.F2ix = fx.F2i.coeff(e, 0);
      pt.F2iy = fx.F2i.coeff(0, e);
      pt.F2i1x = fx.F2i1.coeff(e + 1, 0);
      pt.F2i1y = fx.F2i1.coeff(0, e + 1);
      pt.F2i1m = fx.F2i1.coeff(e, 1);
      pt.f2i_zero = fx.F2i.is_zero();

      pt.m_f = multiplicity_oracle(atlas.f, a, b);
      pt.m_g = multiplicity_oracle(atlas.g, a, b);
      pt.m_w = multiplicity_oracle(atlas.w, a, b);

      switch (pt.type) {
        case PointType::I: ++atlas.count_type1; break;
        case PointType::IIA:
        case PointType::IIB: ++atlas.count_type2; break;
        default: ++atlas.count_type3; break;
      }
      atlas.points.push_back(pt);
    }
  }
  return atlas;
}

FirstCoefReport verify_first_coef(long long t, int max_root_field) {
  SingularAtlas atlas = enumerate_singular(t, max_root_field);
  const FieldSpec& F = *atlas.field;
  const int i = atlas.prof.i;

  FirstCoefReport rep;
  rep.t = t;
  for (const SingularPoint& pt : atlas.points) {
    ++rep.checked;
    if (pt.f2i_zero) ++rep.vanishing;

    bool expect_zero = is_type_a(pt.type);
    if (pt.type == PointType::IIIB) {
      const std::uint32_t ab = F.mul(pt.alpha, F.inv(pt.beta));
      const std::uint32_t bl = F.mul(pt.beta, F.inv(pt.lambda));
      if (F.in_subfield(ab, i) && F.in_subfield(bl, i)) {
        expect_zero = true;
        // This sub-case can only arise in the middle gcd regime.
        if (!(1 < atlas.prof.d && atlas.prof.d < atlas.prof.ell)) {
          std::ostringstream os;
          os << "III.B ratio sub-case outside 1<d<ell at ("
             << FieldSpec::element_hex(pt.alpha) << ","
             << FieldSpec::element_hex(pt.beta) << ")";
          rep.mismatches.push_back(os.str());
        }
      }
    }
    if (expect_zero != pt.f2i_zero) {
      std::ostringstream os;
      os << point_type_name(pt.type) << " point ("
         << FieldSpec::element_hex(pt.alpha) << "," << FieldSpec::element_hex(pt.beta)
         << "): F_(2^i) " << (pt.f2i_zero ? "vanishes" : "does not vanish")
         << " against the criterion";
      rep.mismatches.push_back(os.str());
    }
  }
  return rep;
}

BetaExistsReport verify_beta_exists(long long ell, int max_root_field) {
  EllRoots R = ell_roots(ell, max_root_field);
  const FieldSpec& F = *R.field;

  BetaExistsReport rep;
  rep.ell = ell;
  rep.ok = true;

  std::vector<bool> is_root(F.order(), false);
  for (auto r : R.roots) is_root[r] = true;

  for (auto alpha : R.roots) {
    if (alpha == 1) continue;
    long long valid = 0;   // beta choices that do land on a root lambda
    bool escape = false;   // some beta with lambda^ell != 1
    for (auto beta : R.roots) {
      if (beta == 1 || beta == alpha) continue;
      const std::uint32_t lambda = alpha ^ beta ^ 1u;
      if (lambda < F.order() && is_root[lambda]) ++valid;
      else escape = true;
    }
    if (!escape) rep.ok = false;
    if (valid > ell - 3) rep.ok = false;
    rep.max_valid_per_alpha = std::max(rep.max_valid_per_alpha, valid);

    // Proof mechanism: beta -> alpha+beta+1 restricted to the root set has
    // no fixed point (a fixed point would force alpha = 1).
    for (auto beta : R.roots) {
      const std::uint32_t image = alpha ^ beta ^ 1u;
      if (image < F.order() && is_root[image] && image == beta) rep.ok = false;
    }
  }
  return rep;
}

TangentCone tangent_cone(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta) {
  TangentCone cone{0, BiPoly(p.field()), 0, false, 0, 0};
  cone.degree = multiplicity_oracle(p, alpha, beta);
  cone.form = shift_component(p, alpha, beta, cone.degree);
  auto analysis = distinct_linear_factors(cone.form);
  cone.distinct_linear_count = analysis.distinct_count;

  const int m = cone.degree;
  if (m >= 1) {
    bool pure = true;
    for (const auto& [mono, c] : cone.form.terms()) {
      (void)c;
      if (!(mono == Monomial{m, 0} || mono == Monomial{0, m})) pure = false;
    }
    cone.pure_power = pure;
    if (pure) {
      // (Ax + By)^m with m = 2^i: recover A, B by an m-th root, i.e. the
      // inverse Frobenius applied i times.
      const FieldSpec& F = p.field();
      int i = 0;
      while ((1 << i) < m) ++i;
      if ((1 << i) == m) {
        int back = (F.degree() - i % F.degree() + F.degree()) % F.degree();
        cone.A = F.frobenius(cone.form.coeff(m, 0), back);
        cone.B = F.frobenius(cone.form.coeff(0, m), back);
      }
    }
  }
  return cone;
}

}  // namespace apnlab
