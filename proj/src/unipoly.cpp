#include "apnlab/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace apnlab {

UniPoly UniPoly::monomial(const FieldSpec& f, int deg, std::uint32_t v) {
  UniPoly p(f);
  p.set_coeff(deg, v);
  return p;
}

void UniPoly::set_coeff(int k, std::uint32_t v) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (k >= static_cast<int>(c_.size())) {
    if (v == 0) return;
    c_.resize(k + 1, 0);
  }
  c_[k] = v;
  normalize();
}

std::uint32_t UniPoly::eval(std::uint32_t a) const {
  std::uint32_t acc = 0;
  for (int k = degree(); k >= 0; --k) acc = field_->add(field_->mul(acc, a), c_[k]);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
  std::vector<std::uint32_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = coeff(static_cast<int>(k)) ^ rhs.coeff(static_cast<int>(k));
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero(*field_);
  std::vector<std::uint32_t> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      if (rhs.c_[j]) out[i + j] ^= field_->mul(c_[i], rhs.c_[j]);
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(c_.size(), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = field_->mul(c_[k], c);
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::derivative() const {
  std::vector<std::uint32_t> out;
  for (int k = 1; k <= degree(); ++k)
    out.push_back((k % 2) ? c_[k] : 0);  // k * c_k, char 2
  return UniPoly(*field_, std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const FieldSpec& F = *a.field_;
  UniPoly q(F), r = a;
  std::uint32_t lead_inv = F.inv(b.lead());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    std::uint32_t c = F.mul(r.lead(), lead_inv);
    q.set_coeff(shift, c);
    std::vector<std::uint32_t> rc = r.c_;
    for (int k = 0; k <= b.degree(); ++k)
      rc[k + shift] ^= F.mul(c, b.c_[k]);
    r = UniPoly(F, std::move(rc));
  }
  return {std::move(q), std::move(r)};
}

std::optional<UniPoly> UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    a = divmod(a, b).second;
    std::swap(a, b);
  }
  return a.monic();
}

UniPoly UniPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(field_->inv(lead()));
}

UniPoly UniPoly::square_root() const {
  std::vector<std::uint32_t> out((c_.size() + 1) / 2, 0);
  int half = field_->degree() - 1;  // sqrt(c) = c^(2^(n-1))
  for (int k = 0; k <= degree(); ++k) {
    if (c_[k] == 0) continue;
    if (k % 2) throw std::invalid_argument("not a square: odd exponent present");
    out[k / 2] = field_->frobenius(c_[k], half);
  }
  return UniPoly(*field_, std::move(out));
}

int UniPoly::distinct_root_count() const {
  if (degree() <= 0) return 0;
  UniPoly d = derivative();
  if (d.is_zero()) return square_root().distinct_root_count();
  UniPoly g = gcd(*this, d);
  UniPoly w = *exact_div(*this, g);  // roots of odd multiplicity, each simple
  // Strip every w-root from a copy; what is left holds the roots of even
  // multiplicity, which form a perfect square and recurse via square_root.
  UniPoly v = *this;
  for (;;) {
    UniPoly h = gcd(v, w);
    if (h.degree() <= 0) break;
    v = *exact_div(v, h);
  }
  return w.degree() + v.distinct_root_count();
}

UniPoly UniPoly::frobenius_power_mod(int k) const {
  if (degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
  UniPoly x = monomial(*field_, 1, 1);
  UniPoly r = divmod(x, *this).second;
  for (int s = 0; s < k; ++s) r = divmod(r * r, *this).second;
  return r;
}

std::vector<std::uint32_t> UniPoly::roots_in_field() const {
  std::vector<std::uint32_t> roots;
  if (degree() < 1) return roots;
  const FieldSpec& F = *field_;

  // Root 0 first, then work with the part coprime to x.
  UniPoly p = monic();
  if (p.coeff(0) == 0) {
    roots.push_back(0);
    int shift = 0;
    while (p.coeff(shift) == 0) ++shift;
    std::vector<std::uint32_t> shifted(p.c_.begin() + shift, p.c_.end());
    p = UniPoly(F, std::move(shifted));
  }
  if (p.degree() >= 1) {
    // Product of the linear factors over this field: gcd(p, x^(2^n) - x).
    UniPoly frob = p.frobenius_power_mod(F.degree());
    UniPoly lin = gcd(p, frob + monomial(F, 1, 1));

    // Split by traces Tr(d * x); every nontrivial gcd separates some roots.
    std::vector<UniPoly> stack{lin};
    std::uint32_t d = 1;
    while (!stack.empty()) {
      UniPoly cur = stack.back();
      stack.pop_back();
      if (cur.degree() <= 0) continue;
      if (cur.degree() == 1) {
        roots.push_back(cur.coeff(0));  // monic x + c has root c
        continue;
      }
      UniPoly tr(F);
      UniPoly dx = monomial(F, 1, d);
      UniPoly acc = divmod(dx, cur).second;
      for (int k = 0; k < F.degree(); ++k) {
        tr = tr + acc;
        acc = divmod(acc * acc, cur).second;
      }
      UniPoly g = gcd(cur, tr);
      d = d + 1 < F.order() ? d + 1 : 1;  // deterministic splitter sequence
      if (g.degree() <= 0 || g.degree() == cur.degree()) {
        stack.push_back(cur);  // splitter was useless, try the next one
        continue;
      }
      stack.push_back(g);
      stack.push_back(*exact_div(cur, g));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace apnlab
