#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apnlab/config.hpp"

namespace apnlab {

/// Binary extension field GF(2^n), n <= 24. Elements are packed bit-vectors
/// (coefficients of the residue polynomial), the modulus is the deterministic
/// table polynomial for its degree: the irreducible x^n + ... with the
/// smallest tail when read as an integer. Instances are immutable singletons.
class FieldSpec {
 public:
  static constexpr int kMaxDegree = 24;

  /// Shared instance for degree n; the modulus is re-verified irreducible on
  /// first construction. Throws CeilingError outside [1, kMaxDegree].
  static const FieldSpec& get(int n);

  int degree() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << n_; }
  std::uint64_t group_order() const { return order() - 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0, x = a;
    while (b) {
      if (b & 1) acc ^= x;
      x <<= 1;
      b >>= 1;
    }
    return reduce(acc);
  }

  std::uint32_t sqr(std::uint32_t a) const { return mul(a, a); }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Inverse via a^(2^n - 2); zero is rejected.
  std::uint32_t inv(std::uint32_t a) const;

  /// a^(2^times), the Frobenius automorphism iterated.
  std::uint32_t frobenius(std::uint32_t a, int times = 1) const;

  /// Membership test for GF(2^i) inside this field: a^(2^i) == a. Inside
  /// GF(2^n) this carves out GF(2^gcd(i,n)), which is the intersection of
  /// GF(2^i) with the ambient field in the algebraic closure.
  bool in_subfield(std::uint32_t a, int i) const {
    return frobenius(a, i) == a;
  }

  std::uint64_t element_order(std::uint32_t a) const;

  /// Smallest multiplicative generator (as a bit pattern), order-verified.
  std::uint32_t generator() const;

  /// `n:<int>,modulus:0x<hex>` — the serialization used in CLI reports.
  std::string serialize() const;

  static std::string element_hex(std::uint32_t bits);

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  explicit FieldSpec(int n);

  std::uint32_t reduce(std::uint64_t v) const {
    for (int bit = 2 * n_ - 2; bit >= n_; --bit)
      if (v >> bit & 1) v ^= static_cast<std::uint64_t>(modulus_) << (bit - n_);
    return static_cast<std::uint32_t>(v);
  }

  int n_;
  std::uint32_t modulus_;
  mutable std::uint32_t generator_ = 0;  // lazily found, deterministic
};

/// Spec entry point; same object as FieldSpec::get.
inline const FieldSpec& make_field(int n) { return FieldSpec::get(n); }

/// Element handle for non-hot-path code; scans work on raw bits + FieldSpec.
struct FieldElement {
  std::uint32_t bits = 0;
  const FieldSpec* field = nullptr;

  FieldElement() = default;
  FieldElement(const FieldSpec& f, std::uint32_t b) : bits(b), field(&f) {}

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    a.check_same(b);
    return {*a.field, a.field->add(a.bits, b.bits)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    a.check_same(b);
    return {*a.field, a.field->mul(a.bits, b.bits)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field == b.field && a.bits == b.bits;
  }
  FieldElement pow(std::uint64_t e) const { return {*field, field->pow(bits, e)}; }
  FieldElement inv() const { return {*field, field->inv(bits)}; }
  bool in_subfield(int i) const { return field->in_subfield(bits, i); }

  void check_same(const FieldElement& other) const {
    if (field != other.field)
      throw std::invalid_argument("field mismatch between elements");
  }
};

struct EllRoots {
  const FieldSpec* field = nullptr;  // smallest GF(2^m) with ell | 2^m - 1
  int m = 0;
  std::vector<std::uint32_t> roots;  // all ell solutions of a^ell = 1, sorted
};

/// All ell-th roots of unity in the smallest binary field that has them.
/// ell must be odd and >= 3; throws CeilingError when the field degree
/// (the order of 2 mod ell) exceeds max_root_field.
EllRoots ell_roots(long long ell, int max_root_field = FieldSpec::kMaxDegree);

}  // namespace apnlab
