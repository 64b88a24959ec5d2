#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apnlab/field_gf2.hpp"
#include "apnlab/unipoly.hpp"

namespace apnlab {

struct Monomial {
  int dx = 0;
  int dy = 0;
  int total() const { return dx + dy; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: total degree ascending, then dx descending.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.dx > b.dx;
  }
};

/// Sparse bivariate polynomial over GF(2^m). Terms are kept in canonical
/// order with no zero coefficients, so equality and text output are
/// structural. Values are immutable in spirit: operations return new
/// polynomials.
class BiPoly {
 public:
  static constexpr int kDegreeCeiling = 512;

  using TermMap = std::map<Monomial, std::uint32_t, MonomialLess>;

  explicit BiPoly(const FieldSpec& f) : field_(&f) {}

  static BiPoly zero(const FieldSpec& f) { return BiPoly(f); }
  static BiPoly constant(const FieldSpec& f, std::uint32_t c);
  static BiPoly monomial(const FieldSpec& f, int dx, int dy, std::uint32_t c = 1);
  static BiPoly var_x(const FieldSpec& f) { return monomial(f, 1, 0); }
  static BiPoly var_y(const FieldSpec& f) { return monomial(f, 0, 1); }

  const FieldSpec& field() const { return *field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const;    // max total degree, -1 for zero
  int degree_x() const;
  int degree_y() const;
  bool is_homogeneous() const;

  std::uint32_t coeff(int dx, int dy) const;
  /// XORs c into the coefficient (the only mutation primitive).
  void add_term(int dx, int dy, std::uint32_t c);

  std::uint32_t eval(std::uint32_t a, std::uint32_t b) const;

  BiPoly operator+(const BiPoly& rhs) const;
  BiPoly operator*(const BiPoly& rhs) const;
  /// Binary exponentiation; squaring is term-wise thanks to characteristic 2.
  BiPoly pow(std::uint64_t e) const;

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  /// Coefficient-preserving base change. Only GF(2) lifts into extensions;
  /// general subfield embeddings are out of scope.
  BiPoly lifted(const FieldSpec& target) const;

  /// Canonical text form; see docs/formats.md.
  std::string to_text() const;
  static BiPoly parse(const FieldSpec& f, std::string_view text);

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_field(const BiPoly& rhs) const;

  const FieldSpec* field_;
  TermMap terms_;
};

/// Exact quotient p / q, or nullopt when q does not divide p. Long division
/// in x over the univariate ring in y; x is the fixed main variable so
/// reports are reproducible.
std::optional<BiPoly> exact_div(const BiPoly& p, const BiPoly& q);

/// p(x + alpha, y + beta), expanded with Lucas-parity binomials.
BiPoly shift(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta);

/// Degree-m homogeneous component of shift(p, alpha, beta), computed without
/// materializing the whole shifted polynomial.
BiPoly shift_component(const BiPoly& p, std::uint32_t alpha, std::uint32_t beta, int m);

/// Terms of total degree exactly m.
BiPoly homogeneous_component(const BiPoly& p, int m);

struct LinearFactorAnalysis {
  int distinct_count = 0;
  bool has_y_factor = false;                     // the projective root (1 : 0)
  std::vector<std::uint32_t> roots_in_field;     // u with (u : 1) a root class
  bool roots_complete = false;                   // true iff every class is listed
};

/// Distinct linear factors of a nonzero homogeneous binary form over the
/// algebraic closure. The count is always exact; root classes are reported
/// as far as they live in the coefficient field.
LinearFactorAnalysis distinct_linear_factors(const BiPoly& form);

}  // namespace apnlab
