#include "apnlab/field_gf2.hpp"

#include <memory>
#include <mutex>
#include <sstream>

#include "apnlab/intmath.hpp"

namespace apnlab {
namespace {

// Plain GF(2)[x] helpers on bit-packed polynomials, used only to certify the
// modulus table at construction time.
int poly_deg(std::uint64_t p) {
  if (p == 0) return -1;
  return 63 - __builtin_clzll(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = poly_deg(m);
  for (int d = poly_deg(a); d >= dm; d = poly_deg(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    a = poly_mod(a, m);
    b >>= 1;
  }
  return poly_mod(acc, m);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Rabin test: x^(2^n) == x mod f, and gcd(x^(2^(n/p)) - x, f) = 1 for every
// prime p | n.
bool is_irreducible(std::uint64_t f, int n) {
  if (poly_deg(f) != n) return false;
  std::uint64_t x = 2;  // the polynomial x
  std::uint64_t frob = x;
  std::vector<std::uint64_t> frob_at(n + 1);
  frob_at[0] = x;
  for (int k = 1; k <= n; ++k) {
    frob = poly_mulmod(frob, frob, f);
    frob_at[k] = frob;
  }
  if (frob_at[n] != poly_mod(x, f)) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(n))) {
    int k = n / static_cast<int>(p);
    if (poly_gcd(frob_at[k] ^ x, f) != 1) return false;
  }
  return true;
}

std::uint32_t table_modulus(int n) {
  if (n == 1) return 0b11;  // x + 1, so GF(2) = {0, 1}
  for (std::uint32_t tail = 1; tail < (1u << n); tail += 2) {
    std::uint64_t f = (std::uint64_t{1} << n) | tail;
    if (is_irreducible(f, n)) return static_cast<std::uint32_t>(f);
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldSpec::FieldSpec(int n) : n_(n), modulus_(table_modulus(n)) {
  if (!is_irreducible(modulus_, n))
    throw std::logic_error("modulus failed irreducibility check");
}

const FieldSpec& FieldSpec::get(int n) {
  if (n < 1 || n > kMaxDegree)
    throw CeilingError("field degree out of supported range [1, 24]: " + std::to_string(n));
  static std::mutex mu;
  static std::unique_ptr<FieldSpec> cache[kMaxDegree + 1];
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n].reset(new FieldSpec(n));
  return *cache[n];
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inversion of zero");
  return pow(a, order() - 2);
}

std::uint32_t FieldSpec::frobenius(std::uint32_t a, int times) const {
  for (int k = 0; k < times; ++k) a = sqr(a);
  return a;
}

std::uint64_t FieldSpec::element_order(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
  std::uint64_t ord = group_order();
  for (std::uint64_t p : prime_factors(group_order())) {
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

std::uint32_t FieldSpec::generator() const {
  if (generator_ != 0) return generator_;
  for (std::uint32_t c = 2; c < order(); ++c) {
    if (element_order(c) == group_order()) {
      generator_ = c;
      return c;
    }
  }
  // n = 1: the group is trivial and 1 generates it.
  generator_ = 1;
  return generator_;
}

std::string FieldSpec::serialize() const {
  std::ostringstream os;
  os << "n:" << n_ << ",modulus:0x" << std::hex << modulus_;
  return os.str();
}

std::string FieldSpec::element_hex(std::uint32_t bits) {
  std::ostringstream os;
  os << std::hex << bits;
  return os.str();
}

EllRoots ell_roots(long long ell, int max_root_field) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("ell must be odd and >= 3");
  int m = order_of_two_mod(ell);
  if (m > max_root_field)
    throw CeilingError("roots of unity for ell=" + std::to_string(ell) +
                       " need GF(2^" + std::to_string(m) + "), above the ceiling");
  const FieldSpec& F = FieldSpec::get(m);

  EllRoots out;
  out.field = &F;
  out.m = m;
  std::uint32_t g = F.generator();
  std::uint64_t step = F.group_order() / static_cast<std::uint64_t>(ell);
  std::uint32_t h = F.pow(g, step);
  std::uint32_t v = 1;
  for (long long k = 0; k < ell; ++k) {
    out.roots.push_back(v);
    v = F.mul(v, h);
  }
  std::sort(out.roots.begin(), out.roots.end());

  if (m <= 12) {
    // Small fields: cross-verify against the direct scan of a^ell = 1.
    std::vector<std::uint32_t> scan;
    for (std::uint64_t a = 1; a < F.order(); ++a)
      if (F.pow(static_cast<std::uint32_t>(a), ell) == 1)
        scan.push_back(static_cast<std::uint32_t>(a));
    if (scan != out.roots)
      throw VerificationError("generator-derived roots of unity disagree with scan");
  }
  return out;
}

}  // namespace apnlab
