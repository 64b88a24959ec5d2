#include "apnlab/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace apnlab {

BiPoly BiPoly::constant(const FieldSpec& f, std::uint32_t c) {
  BiPoly p(f);
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::monomial(const FieldSpec& f, int dx, int dy, std::uint32_t c) {
  BiPoly p(f);
  p.add_term(dx, dy, c);
  return p;
}

int BiPoly::degree() const {
  // Canonical order is degree-ascending, so the last term is maximal.
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total();
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
  return d;
}

bool BiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.total() == terms_.rbegin()->first.total();
}

std::uint32_t BiPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? 0 : it->second;
}

void BiPoly::add_term(int dx, int dy, std::uint32_t c) {
  if (c == 0) return;
  if (dx < 0 || dy < 0) throw std::invalid_argument("negative exponent");
  if (dx + dy > kDegreeCeiling)
    throw CeilingError("bivariate degree ceiling exceeded");
  Monomial m{dx, dy};
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second ^= c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t BiPoly::eval(std::uint32_t a, std::uint32_t b) const {
  if (terms_.empty()) return 0;
  std::vector<std::uint32_t> pa(degree_x() + 1), pb(degree_y() + 1);
  pa[0] = pb[0] = 1;
  for (std::size_t k = 1; k < pa.size(); ++k) pa[k] = field_->mul(pa[k - 1], a);
  for (std::size_t k = 1; k < pb.size(); ++k) pb[k] = field_->mul(pb[k - 1], b);
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_)
    acc ^= field_->mul(c, field_->mul(pa[m.dx], pb[m.dy]));
  return acc;
}

void BiPoly::check_same_field(const BiPoly& rhs) const {
  if (field_ != rhs.field_)
    throw std::invalid_argument("bivariate operands over different fields");
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
  check_same_field(rhs);
  BiPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m.dx, m.dy, c);
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
  check_same_field(rhs);
  BiPoly out(*field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      out.add_term(ma.dx + mb.dx, ma.dy + mb.dy, field_->mul(ca, cb));
  return out;
}

BiPoly BiPoly::pow(std::uint64_t e) const {
  BiPoly acc = constant(*field_, 1);
  BiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) {
      BiPoly sq(*field_);  // (sum c m)^2 = sum c^2 m^2 in characteristic 2
      for (const auto& [m, c] : base.terms_)
        sq.add_term(2 * m.dx, 2 * m.dy, field_->sqr(c));
      base = std::move(sq);
    }
  }
  return acc;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly out(*field_);
  for (const auto& [m, c] : terms_)
    if (m.dx % 2) out.add_term(m.dx - 1, m.dy, c);
  return out;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly out(*field_);
  for (const auto& [m, c] : terms_)
    if (m.dy % 2) out.add_term(m.dx, m.dy - 1, c);
  return out;
}

BiPoly BiPoly::lifted(const FieldSpec& target) const {
  if (&target == field_) return *this;
  if (field_->degree() != 1)
    throw std::invalid_argument("only GF(2) coefficients lift to extensions");
  BiPoly out(target);
  for (const auto& [m, c] : terms_) out.add_term(m.dx, m.dy, c);
  return out;
}

// ---------------------------------------------------------------------------
// exact division

namespace {

// polynomial-in-x view: rows[k] is the y-polynomial multiplying x^k
std::vector<UniPoly> rows_of(const BiPoly& p) {
  const FieldSpec& F = p.field();
  std::vector<UniPoly> rows(p.degree_x() + 1, UniPoly(F));
  for (const auto& [m, c] : p.terms()) {
    UniPoly& row = rows[m.dx];
    row.set_coeff(m.dy, row.coeff(m.dy) ^ c);
  }
  return rows;
}

int top_row(const std::vector<UniPoly>& rows) {
  for (int k = static_cast<int>(rows.size()) - 1; k >= 0; --k)
    if (!rows[k].is_zero()) return k;
  return -1;
}

}  // namespace

std::optional<BiPoly> exact_div(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (&p.field() != &q.field())
    throw std::invalid_argument("bivariate operands over different fields");
  const FieldSpec& F = p.field();
  if (p.is_zero()) return BiPoly::zero(F);

  std::vector<UniPoly> r = rows_of(p);
  const std::vector<UniPoly> d = rows_of(q);
  const int dq = top_row(d);
  const UniPoly& dlead = d[dq];

  BiPoly quotient(F);
  for (int rt = top_row(r); rt >= dq; rt = top_row(r)) {
    auto c = UniPoly::exact_div(r[rt], dlead);
    if (!c) return std::nullopt;
    int shift = rt - dq;
    for (int k = 0; k <= dq; ++k)
      if (!d[k].is_zero()) r[k + shift] = r[k + shift] + (*c) * d[k];
    for (int j = 0; j <= c->degree(); ++j)
      quotient.add_term(shift, j, c->coeff(j));
  }
  if (top_row(r) >= 0) return std::nullopt;
  return quotient;
}

// ---------------------------------------------------------------------------
// Taylor shifts via Lucas parity: C(a, j) is odd iff j is a submask of a.

BiPoly shift(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta) {
  const FieldSpec& F = p.field();
  // Cache powers up to the coordinate degrees.
  std::vector<std::uint32_t> pa(p.degree_x() + 2, 1), pb(p.degree_y() + 2, 1);
  for (std::size_t k = 1; k < pa.size(); ++k) pa[k] = F.mul(pa[k - 1], alpha);
  for (std::size_t k = 1; k < pb.size(); ++k) pb[k] = F.mul(pb[k - 1], beta);

  BiPoly out(F);
  for (const auto& [m, c] : p.terms()) {
    unsigned a = static_cast<unsigned>(m.dx), b = static_cast<unsigned>(m.dy);
    unsigned j = a;
    for (;;) {  // submask loop over j ⊆ a
      std::uint32_t ca = F.mul(c, pa[a - j]);
      unsigned k = b;
      for (;;) {
        out.add_term(static_cast<int>(j), static_cast<int>(k), F.mul(ca, pb[b - k]));
        if (k == 0) break;
        k = (k - 1) & b;
      }
      if (j == 0) break;
      j = (j - 1) & a;
    }
  }
  return out;
}

BiPoly shift_component(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta, int m) {
  const FieldSpec& F = p.field();
  std::vector<std::uint32_t> pa(p.degree_x() + 2, 1), pb(p.degree_y() + 2, 1);
  for (std::size_t k = 1; k < pa.size(); ++k) pa[k] = F.mul(pa[k - 1], alpha);
  for (std::size_t k = 1; k < pb.size(); ++k) pb[k] = F.mul(pb[k - 1], beta);

  BiPoly out(F);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.total() < m) continue;
    unsigned a = static_cast<unsigned>(mono.dx), b = static_cast<unsigned>(mono.dy);
    unsigned j = a;
    for (;;) {
      int k = m - static_cast<int>(j);
      if (k >= 0 && k <= static_cast<int>(b) &&
          (static_cast<unsigned>(k) & b) == static_cast<unsigned>(k)) {
        std::uint32_t v = F.mul(c, F.mul(pa[a - j], pb[b - static_cast<unsigned>(k)]));
        out.add_term(static_cast<int>(j), k, v);
      }
      if (j == 0) break;
      j = (j - 1) & a;
    }
  }
  return out;
}

BiPoly homogeneous_component(const BiPoly& p, int m) {
  BiPoly out(p.field());
  for (const auto& [mono, c] : p.terms())
    if (mono.total() == m) out.add_term(mono.dx, mono.dy, c);
  return out;
}

LinearFactorAnalysis distinct_linear_factors(const BiPoly& form) {
  if (form.is_zero())
    throw std::invalid_argument("zero form has no factor structure");
  if (!form.is_homogeneous())
    throw std::invalid_argument("linear-factor analysis needs a homogeneous form");
  const FieldSpec& F = form.field();
  const int m = form.degree();

  // Dehomogenize with u = x/y: form = y^m * A(u), A collects x^j y^(m-j).
  UniPoly a(F);
  for (const auto& [mono, c] : form.terms()) a.set_coeff(mono.dx, a.coeff(mono.dx) ^ c);

  LinearFactorAnalysis out;
  out.has_y_factor = a.degree() < m;
  out.distinct_count = a.distinct_root_count() + (out.has_y_factor ? 1 : 0);
  out.roots_in_field = a.roots_in_field();
  int located = static_cast<int>(out.roots_in_field.size()) + (out.has_y_factor ? 1 : 0);
  out.roots_complete = located == out.distinct_count;
  return out;
}

// ---------------------------------------------------------------------------
// text format

namespace {

void append_var(std::ostringstream& os, char v, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) os << "*";
  os << v;
  if (e > 1) os << "^" << e;
  need_star = true;
}

}  // namespace

std::string BiPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool gf2 = field_->degree() == 1;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool need_star = false;
    if (!gf2) {
      os << "(" << FieldSpec::element_hex(c) << ")";
      // coefficient prefix binds directly to the monomial, no '*'
    }
    if (m.dx == 0 && m.dy == 0) {
      if (gf2) os << "1";
      continue;
    }
    append_var(os, 'x', m.dx, need_star);
    append_var(os, 'y', m.dy, need_star);
  }
  return os.str();
}

BiPoly BiPoly::parse(const FieldSpec& f, std::string_view text) {
  BiPoly out(f);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint = [&](int base) {
    std::uint64_t v = 0;
    bool any = false;
    for (; pos < text.size(); ++pos) {
      char ch = text[pos];
      int digit;
      if (ch >= '0' && ch <= '9') digit = ch - '0';
      else if (base == 16 && ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
      else if (base == 16 && ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
      else break;
      v = v * base + static_cast<std::uint64_t>(digit);
      any = true;
    }
    if (!any) throw std::invalid_argument("expected a number in polynomial text");
    return v;
  };

  skip_ws();
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return out;

  bool expect_term = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_term) {
      if (text[pos] != '+')
        throw std::invalid_argument("expected '+' between terms");
      ++pos;
      skip_ws();
    }
    expect_term = false;

    std::uint32_t c = 1;
    int dx = 0, dy = 0;
    bool saw_anything = false;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      c = static_cast<std::uint32_t>(parse_uint(16));
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("unterminated coefficient");
      ++pos;
      saw_anything = true;
    }
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
        char v = text[pos];
        ++pos;
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          e = static_cast<int>(parse_uint(10));
        }
        (v == 'x' ? dx : dy) += e;
        saw_anything = true;
        continue;
      }
      if (pos < text.size() && text[pos] == '1' && !saw_anything) {
        ++pos;
        saw_anything = true;
        continue;
      }
      break;
    }
    if (!saw_anything)
      throw std::invalid_argument("empty term in polynomial text");
    out.add_term(dx, dy, c);
  }
  return out;
}

}  // namespace apnlab
