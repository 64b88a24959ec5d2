#include "apnlab/curves.hpp"

#include <stdexcept>

#include "apnlab/parallel.hpp"

namespace apnlab {

namespace {

void require_odd_t(long long t) {
  if (t < 3 || t % 2 == 0)
    throw std::invalid_argument("t must be odd and >= 3");
  if (t > BiPoly::kDegreeCeiling)
    throw CeilingError("t exceeds the bivariate degree ceiling");
}

}  // namespace

CurveFamily build_curves(long long t) {
  require_odd_t(t);
  const FieldSpec& F2 = FieldSpec::get(1);
  BiPoly x = BiPoly::var_x(F2), y = BiPoly::var_y(F2);
  BiPoly one = BiPoly::constant(F2, 1);

  BiPoly f = x.pow(t) + y.pow(t) + one + (x + y + one).pow(t);
  BiPoly w = (x + one) * (y + one) * (x + y);
  auto g = exact_div(f, w);
  if (!g)
    throw VerificationError("(x+1)(y+1)(x+y) failed to divide f_t: internal error");

  BiPoly hnum = (x + one).pow(t) + x.pow(t) + (y + one).pow(t) + y.pow(t);
  auto h = exact_div(hnum, (x + y) * (x + y + one));
  if (!h)
    throw VerificationError("(x+y)(x+y+1) failed to divide the derivative-style numerator");

  return CurveFamily{t, std::move(f), std::move(*g), std::move(w), std::move(*h)};
}

bool transform_identity(long long t) {
  require_odd_t(t);
  const FieldSpec& F2 = FieldSpec::get(1);
  BiPoly x = BiPoly::var_x(F2), y = BiPoly::var_y(F2);
  BiPoly one = BiPoly::constant(F2, 1);

  BiPoly lhs = (x + one).pow(t) + x.pow(t) + (y + one).pow(t) + y.pow(t);

  // y^t * f(X, Y) with X=(x+1)/y, Y=x/y: each monomial X^a Y^b of f turns
  // into (x+1)^a x^b y^(t-a-b) once the y^t clears the denominators.
  BiPoly f = x.pow(t) + y.pow(t) + one + (x + y + one).pow(t);
  BiPoly rhs = BiPoly::zero(F2);
  BiPoly xp1 = x + one;
  for (const auto& [m, c] : f.terms()) {
    (void)c;  // GF(2)
    rhs = rhs + xp1.pow(m.dx) * x.pow(m.dy) * y.pow(t - m.dx - m.dy);
  }
  return lhs == rhs;
}

long long count_points(const CurveFamily& fam, int n, bool distinct_only,
                       unsigned workers, int max_n) {
  if (n < 1 || n > max_n)
    throw CeilingError("point-count field degree outside [1, max_n]");
  const FieldSpec& F = FieldSpec::get(n);
  const BiPoly& g = fam.g;

  // Row decomposition: coefficient of y^k as a sparse list over x-degrees.
  int dy = std::max(g.degree_y(), 0);
  int dxmax = std::max(g.degree_x(), 0);
  std::vector<std::vector<std::pair<int, std::uint32_t>>> rows(dy + 1);
  for (const auto& [m, c] : g.terms()) rows[m.dy].push_back({m.dx, c});

  const std::uint64_t q = F.order();
  auto chunk = [&](std::size_t lo, std::size_t hi) -> long long {
    std::vector<std::uint32_t> pa(dxmax + 1);
    std::vector<std::uint32_t> rowc(dy + 1);
    long long count = 0;
    for (std::size_t av = lo; av < hi; ++av) {
      auto a = static_cast<std::uint32_t>(av);
      if (distinct_only && a == 1) continue;
      pa[0] = 1;
      for (int k = 1; k <= dxmax; ++k) pa[k] = F.mul(pa[k - 1], a);
      for (int k = 0; k <= dy; ++k) {
        std::uint32_t acc = 0;
        for (auto [dx, c] : rows[k]) acc ^= F.mul(c, pa[dx]);
        rowc[k] = acc;
      }
      for (std::uint64_t bv = 0; bv < q; ++bv) {
        auto b = static_cast<std::uint32_t>(bv);
        if (distinct_only && (b == 1 || b == a)) continue;
        std::uint32_t val = rowc[dy];
        for (int k = dy - 1; k >= 0; --k) val = F.mul(val, b) ^ rowc[k];
        if (val == 0) ++count;
      }
    }
    return count;
  };
  return parallel_chunks<long long>(
      q, workers, 0, chunk, [](long long a, long long b) { return a + b; });
}

long long count_points(long long t, int n, bool distinct_only, unsigned workers,
                       int max_n) {
  return count_points(build_curves(t), n, distinct_only, workers, max_n);
}

bool infinity_check(const CurveFamily& fam) {
  const BiPoly& g = fam.g;
  int d = g.degree();
  if (d <= 0) return true;  // constants have no points at all out there

  // Homogenize G(x,y,z) = sum g_m z^(d-m). On z = 0 a singular point needs
  // g_d = dg_d/dx = dg_d/dy = 0 and g_(d-1) = 0 at a common projective root.
  BiPoly top = homogeneous_component(g, d);
  BiPoly next = homogeneous_component(g, d - 1);
  std::vector<BiPoly> forms{top, top.derivative_x(), top.derivative_y(), next};

  // Common root over the closure: all forms share (1:0), or the
  // dehomogenizations in u = x/y share a nonconstant gcd. Identically zero
  // forms vanish everywhere and impose no constraint.
  const FieldSpec& F = g.field();
  bool vanish_at_one_zero = true;
  UniPoly common(F);
  bool first = true;
  for (const auto& form : forms) {
    if (form.is_zero()) continue;
    int m = form.degree();
    UniPoly a(F);
    for (const auto& [mono, c] : form.terms())
      a.set_coeff(mono.dx, a.coeff(mono.dx) ^ c);
    if (a.degree() == m) vanish_at_one_zero = false;  // x^m coefficient nonzero
    common = first ? a : UniPoly::gcd(common, a);
    first = false;
  }
  if (vanish_at_one_zero) return false;
  return common.degree() <= 0;
}

bool infinity_check(long long t) { return infinity_check(build_curves(t)); }

}  // namespace apnlab
