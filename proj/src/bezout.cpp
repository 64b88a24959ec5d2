#include "apnlab/bezout.hpp"

#include <algorithm>
#include <stdexcept>

namespace apnlab {

namespace {

bool divides_pow2m1(int i, long long ell) {
  return ell >= 3 && ell % 2 == 1 && (((1LL << i) - 1) % ell == 0);
}

AuditReport make_row(std::string id, int i, long long ell, int128 lhs, int128 rhs,
                     char rel) {
  AuditReport r;
  r.formula_id = std::move(id);
  r.i = i;
  r.ell = ell;
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = rel;
  switch (rel) {
    case '<': r.pass = lhs < rhs; break;
    case '>': r.pass = lhs > rhs; break;
    case 'L': r.pass = lhs <= rhs; break;  // non-strict <=
    default: r.pass = lhs == rhs; break;
  }
  return r;
}

}  // namespace

std::vector<AuditReport> audit_technical(int i, long long ell) {
  std::vector<AuditReport> out;
  const bool boundary = ell == (1LL << i) - 1;
  if (i <= 2 || !divides_pow2m1(i, ell) || boundary) {
    AuditReport r;
    r.formula_id = "gap_exceeds_two";
    r.i = i;
    r.ell = ell;
    r.applicable = false;
    r.note = boundary ? "skipped: ell = 2^i - 1" : "skipped: precondition";
    out.push_back(r);
    r.formula_id = "ratio_below_quarter";
    out.push_back(r);
    return out;
  }
  out.push_back(make_row("gap_exceeds_two", i, ell,
                         (int128{1} << (i - 1)) + 1 - ell, 2, '>'));
  out.push_back(make_row("ratio_below_quarter", i, ell, 4 * int128{ell - 3},
                         int128{1} << (i + 1), '<'));
  out.back().note = "cross-multiplied";
  return out;
}

std::vector<AuditReport> audit_split2(int i, long long ell) {
  const int128 h = int128{1} << (i - 1);  // 2^(i-1)
  const int128 L = ell;
  const int128 lhs = (h - 1) * (h - 1) + 3 * (L - 1) * h * h +
                     (L - 1) * (L - 3) * h * (h + 1);
  const int128 rhs = (h * L - 1) * (h * L - 1);
  std::vector<AuditReport> out;
  out.push_back(make_row("two_factor_bezout", i, ell, lhs, rhs, '<'));
  out.push_back(make_row("half_exceeds_ell_minus_one", i, ell, h, L - 1, '>'));
  if (ell == (1LL << i) - 1)
    for (auto& r : out) r.note = "boundary: expected to fail";
  return out;
}

std::vector<AuditReport> audit_square(int i, long long ell,
                                      std::optional<int128> measured_sum) {
  const int128 e = int128{1} << i;  // 2^i
  const int128 L = ell;
  const int128 lhs = (e * L - 2) * (e * L - 2);
  const int128 rhs = (e - 2) * (e - 2) + (3 * L - 3) * e * e +
                     (L - 1) * (L - 3) * (e + 1) * (e + 1);
  std::vector<AuditReport> out;
  out.push_back(make_row("degree_square_bound", i, ell, lhs, rhs, '>'));
  if (ell == (1LL << i) - 1) out.back().note = "boundary: expected to fail";
  if (measured_sum) {
    out.push_back(make_row("measured_multiplicity_sum", i, ell, *measured_sum, rhs, 'L'));
    out.back().note = "enumerated sum of m_P(g)^2 vs the table bound";
  }
  return out;
}

AuditReport audit_main_inequality(int i, long long ell) {
  const int128 e = int128{1} << i;
  const int128 L = ell;
  const int128 lhs = (e * L - 2) * (e * L - 2);
  const int128 rhs = (e - 2) * (e - 2) + e * e * (3 * L - 3) +
                     (e + 1) * (e + 1) * (L * L - 4 * L + 3);
  AuditReport r = make_row("many_factor_bezout", i, ell, lhs, rhs, '>');
  if (ell == (1LL << i) - 1) r.note = "boundary: expected to fail";
  return r;
}

AuditReport audit_maxofmany(const std::vector<long long>& values) {
  int128 n = static_cast<int128>(values.size());
  int128 sum = 0, pairs = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] < 0) throw std::invalid_argument("values must be nonnegative");
    sum += values[a];
    for (std::size_t b = a + 1; b < values.size(); ++b)
      pairs += static_cast<int128>(values[a]) * values[b];
  }
  AuditReport r = make_row("pairwise_product_max", 0, 0, 2 * n * pairs,
                           (n - 1) * sum * sum, 'L');
  r.note = "cross-multiplied by 2n";
  return r;
}

AuditSweep audit_sweep(int max_i) {
  AuditSweep sweep;
  auto absorb = [&](const AuditReport& r, bool boundary) {
    sweep.rows.push_back(r);
    if (!r.applicable) return;
    if (boundary) {
      // Only the strict inequalities are required to collapse there.
      if (r.relation == '<' || r.relation == '>')
        sweep.all_boundary_fail = sweep.all_boundary_fail && !r.pass;
    } else {
      sweep.all_proper_pass = sweep.all_proper_pass && r.pass;
    }
  };
  for (int i = 2; i <= max_i; ++i) {
    const long long full = (1LL << i) - 1;
    for (long long ell : all_divisors(static_cast<std::uint64_t>(full))) {
      if (ell < 3) continue;
      const bool boundary = ell == full;
      if (!boundary)
        for (const auto& r : audit_technical(i, ell)) absorb(r, false);
      for (const auto& r : audit_split2(i, ell)) absorb(r, boundary);
      for (const auto& r : audit_square(i, ell)) absorb(r, boundary);
      absorb(audit_main_inequality(i, ell), boundary);
    }
  }
  return sweep;
}

// ---------------------------------------------------------------------------
// intersection numbers

namespace {

UniPoly restrict_to_y0(const BiPoly& p) {
  UniPoly out(p.field());
  for (const auto& [m, c] : p.terms())
    if (m.dy == 0) out.set_coeff(m.dx, out.coeff(m.dx) ^ c);
  return out;
}

BiPoly divide_out_y(const BiPoly& p) {
  BiPoly out(p.field());
  for (const auto& [m, c] : p.terms()) out.add_term(m.dx, m.dy - 1, c);
  return out;
}

}  // namespace

IntersectionNumber fulton_intersection(const BiPoly& f, const BiPoly& g,
                                       std::uint32_t px, std::uint32_t py) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("intersection number needs nonzero curves");
  if (&f.field() != &g.field())
    throw std::invalid_argument("curves over different fields");
  const FieldSpec& K = f.field();

  BiPoly F = shift(f, px, py), G = shift(g, px, py);  // P is now the origin
  long long acc = 0;
  for (;;) {
    if (F.coeff(0, 0) != 0 || G.coeff(0, 0) != 0) return {false, acc};
    UniPoly f0 = restrict_to_y0(F), g0 = restrict_to_y0(G);
    if (f0.is_zero() && g0.is_zero()) return {true, 0};  // y divides both
    if (f0.is_zero()) {
      std::swap(F, G);
      std::swap(f0, g0);
    }
    if (g0.is_zero()) {
      // G = y * H and I(P, y, F) is the order of x = 0 in F(x, 0).
      int ord = 0;
      while (f0.coeff(ord) == 0) ++ord;
      acc += ord;
      G = divide_out_y(G);
      continue;
    }
    if (f0.degree() > g0.degree()) {
      std::swap(F, G);
      std::swap(f0, g0);
    }
    // Cancel the x-leading terms of the restrictions; constants scale freely.
    int k = g0.degree() - f0.degree();
    G = G * BiPoly::constant(K, f0.lead()) + F * BiPoly::monomial(K, k, 0, g0.lead());
    if (G.is_zero()) return {true, 0};  // G was a multiple of F
  }
}

namespace {

// Chart around the line at infinity: homogenize to degree D and set y = 1
// (variables x, z) or x = 1 (variables y, z).
BiPoly chart_y1(const BiPoly& p) {
  const int d = p.degree();
  BiPoly out(p.field());
  for (const auto& [m, c] : p.terms()) out.add_term(m.dx, d - m.dx - m.dy, c);
  return out;
}

BiPoly chart_x1(const BiPoly& p) {
  const int d = p.degree();
  BiPoly out(p.field());
  for (const auto& [m, c] : p.terms()) out.add_term(m.dy, d - m.dx - m.dy, c);
  return out;
}

UniPoly univariate_in_y(const BiPoly& p, std::uint32_t a, const FieldSpec& F) {
  std::vector<std::uint32_t> pa(p.degree_x() + 2, 1);
  for (std::size_t k = 1; k < pa.size(); ++k) pa[k] = F.mul(pa[k - 1], a);
  UniPoly out(F);
  for (const auto& [m, c] : p.terms())
    out.set_coeff(m.dy, out.coeff(m.dy) ^ F.mul(c, pa[m.dx]));
  return out;
}

}  // namespace

BezoutSum bezout_point_sum(const BiPoly& f, const BiPoly& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw std::invalid_argument("point sums need curves of positive degree");
  const FieldSpec& F = f.field();
  BezoutSum out;

  for (std::uint64_t av = 0; av < F.order(); ++av) {
    const auto a = static_cast<std::uint32_t>(av);
    UniPoly fa = univariate_in_y(f, a, F), ga = univariate_in_y(g, a, F);
    if (fa.is_zero() && ga.is_zero()) {  // the line x = a lies on both
      out.shared_component = true;
      return out;
    }
    UniPoly h = fa.is_zero() ? ga : ga.is_zero() ? fa : UniPoly::gcd(fa, ga);
    if (h.degree() < 1) continue;
    for (std::uint32_t b : h.roots_in_field()) {
      IntersectionNumber in = fulton_intersection(f, g, a, b);
      if (in.infinite) {
        out.shared_component = true;
        return out;
      }
      out.affine += in.value;
    }
  }

  // Line at infinity: common projective roots of the top forms.
  BiPoly tf = homogeneous_component(f, f.degree());
  BiPoly tg = homogeneous_component(g, g.degree());
  UniPoly au(F), bu(F);
  for (const auto& [m, c] : tf.terms()) au.set_coeff(m.dx, au.coeff(m.dx) ^ c);
  for (const auto& [m, c] : tg.terms()) bu.set_coeff(m.dx, bu.coeff(m.dx) ^ c);
  BiPoly fy = chart_y1(f), gy = chart_y1(g);
  for (std::uint32_t u0 : UniPoly::gcd(au, bu).roots_in_field()) {
    IntersectionNumber in = fulton_intersection(fy, gy, u0, 0);
    if (in.infinite) {
      out.shared_component = true;
      return out;
    }
    out.at_infinity += in.value;
  }
  if (au.degree() < tf.degree() && bu.degree() < tg.degree()) {
    // Both top forms vanish at (1 : 0 : 0); switch to the x = 1 chart.
    IntersectionNumber in = fulton_intersection(chart_x1(f), chart_x1(g), 0, 0);
    if (in.infinite) {
      out.shared_component = true;
      return out;
    }
    out.at_infinity += in.value;
  }
  return out;
}

}  // namespace apnlab
