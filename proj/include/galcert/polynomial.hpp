#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galcert/finite_field.hpp"

namespace galcert {

/// Dense univariate polynomial over a finite field, low degree first. The
/// coefficient vector never carries trailing zeros; the zero polynomial is the
/// empty vector and has degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field field);
  Polynomial(Field field, std::vector<FFElement> coeffs);

  /// Integer coefficients reduced into the field, low degree first.
  static Polynomial from_ints(const Field& field, std::span<const std::int64_t> coeffs);
  static Polynomial from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs) {
    return from_ints(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
  }
  static Polynomial constant(const FFElement& c);
  /// c * x^n
  static Polynomial monomial(const FFElement& c, int n);
  static Polynomial x(const Field& field) { return monomial(field.one(), 1); }

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<FFElement>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  FFElement coeff(int i) const;
  FFElement leading() const;

  /// Horner evaluation. A polynomial over F_p may be evaluated at an element
  /// of any extension F_{p^d}.
  FFElement operator()(const FFElement& at) const;

  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const FFElement& c) const;
  Polynomial operator-() const;
  Polynomial operator/(const Polynomial& other) const;
  Polynomial operator%(const Polynomial& other) const;

  bool operator==(const Polynomial& other) const;
  /// Degree first, then coefficients from the highest degree down.
  std::strong_ordering operator<=>(const Polynomial& other) const;

  /// e.g. "x^4 + 3x^3 + 2x^2 + 5x + 2"; extension coefficients are
  /// parenthesized when they have more than one term.
  std::string to_string() const;

 private:
  void normalize();
  void require_same_field(const Polynomial& other) const;

  Field field_;
  std::vector<FFElement> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q*g + r with deg r < deg g. Throws std::domain_error for g = 0.
DivMod divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

Polynomial derivative(const Polynomial& f);

/// base^exp mod modulus.
Polynomial pow_mod(const Polynomial& base, std::uint64_t exp, const Polynomial& modulus);

/// Image of a polynomial over F_p in F_{p^d}[x].
Polynomial embed(const Polynomial& f, const Field& extension);

/// True iff gcd(f, f') is constant. Throws std::invalid_argument for zero.
bool is_squarefree(const Polynomial& f);

/// Roots of f in F_{p^d} with multiplicity, ascending by element index. f
/// must be over F_p or over F_{p^d} itself. Exhaustive evaluation.
std::vector<FFElement> roots_in(const Polynomial& f, int degree);

struct Factorization {
  FFElement unit;
  /// Monic irreducible factors with multiplicity, sorted by degree then
  /// lexicographically (highest coefficient first).
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial expand() const;
  std::string to_string() const;
};

/// Full factorization into monic irreducibles: squarefree decomposition,
/// distinct-degree splitting with gcd(f, x^{q^k} - x), then equal-degree
/// splitting by exhaustive search over monic candidates. Deterministic.
Factorization factor(const Polynomial& f);

/// Rabin's test. Throws std::invalid_argument for constants and zero.
bool is_irreducible(const Polynomial& f);

/// Applies the Frobenius x -> x^p to every coefficient. Identity over F_p.
Polynomial conjugate_poly(const Polynomial& g);

/// Degree of the splitting field of f over its own field: the lcm of the
/// degrees of its irreducible factors.
int splitting_degree(const Polynomial& f);

}  // namespace galcert
