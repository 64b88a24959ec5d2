#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "apnlab/field_gf2.hpp"

namespace apnlab {

/// Dense univariate polynomial over a GF(2^n) coefficient field. Mostly an
/// internal workhorse: the x-long-division inside bivariate exact division,
/// distinct-root counting of binary forms, and intersection-point location.
class UniPoly {
 public:
  explicit UniPoly(const FieldSpec& f) : field_(&f) {}
  UniPoly(const FieldSpec& f, std::vector<std::uint32_t> coeffs)
      : field_(&f), c_(std::move(coeffs)) {
    normalize();
  }

  static UniPoly zero(const FieldSpec& f) { return UniPoly(f); }
  static UniPoly constant(const FieldSpec& f, std::uint32_t v) {
    return UniPoly(f, {v});
  }
  static UniPoly monomial(const FieldSpec& f, int deg, std::uint32_t v);

  const FieldSpec& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  std::uint32_t coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  void set_coeff(int k, std::uint32_t v);

  std::uint32_t eval(std::uint32_t a) const;

  UniPoly operator+(const UniPoly& rhs) const;
  UniPoly operator*(const UniPoly& rhs) const;
  UniPoly scaled(std::uint32_t c) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  UniPoly derivative() const;

  /// Quotient/remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Exact quotient or nullopt when the remainder is nonzero.
  static std::optional<UniPoly> exact_div(const UniPoly& a, const UniPoly& b);
  /// Monic gcd; gcd(0, b) = monic b.
  static UniPoly gcd(UniPoly a, UniPoly b);

  UniPoly monic() const;

  /// For polynomials with only even exponents: the square root (char 2).
  UniPoly square_root() const;

  /// Number of distinct roots in the algebraic closure. Handles the
  /// characteristic-2 degeneracy (zero derivative => perfect square).
  int distinct_root_count() const;

  /// All roots lying in the coefficient field itself, each once, sorted.
  /// Frobenius + trace splitting, no scan of the field.
  std::vector<std::uint32_t> roots_in_field() const;

  /// x^(2^k) mod this, by repeated squaring of residues.
  UniPoly frobenius_power_mod(int k) const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FieldSpec* field_;
  std::vector<std::uint32_t> c_;
};

}  // namespace apnlab
