#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace galcert {

/// Description of F_{p^d}. The modulus is the defining polynomial of the
/// extension, low degree first and monic; it is empty for the prime field.
struct FieldSpec {
  std::uint64_t p = 0;
  int degree = 1;
  std::vector<std::uint64_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

class FFElement;

/// Shared, immutable handle to a finite field F_{p^d}, d in {1, 2, 3, 4}.
///
/// Elements are represented densely as polynomials in a generator t modulo
/// the field's modulus. The modulus for (p, d) is canonical: the
/// lexicographically smallest monic irreducible of degree d, comparing the
/// coefficients from the highest degree down.
class Field {
 public:
  static constexpr int kMaxDegree = 4;

  /// Canonical construction. Throws std::invalid_argument for a non-prime p,
  /// p >= 2^32, or an unsupported degree.
  static Field make(std::uint64_t p, int degree);

  std::uint64_t p() const { return spec_->p; }
  int degree() const { return spec_->degree; }
  const std::vector<std::uint64_t>& modulus() const { return spec_->modulus; }
  const FieldSpec& spec() const { return *spec_; }
  bool is_prime_field() const { return spec_->degree == 1; }

  /// Number of elements, p^d.
  std::uint64_t size() const { return size_; }

  FFElement zero() const;
  FFElement one() const;
  /// Image of an integer under Z -> F_p -> F_{p^d}.
  FFElement element(std::int64_t value) const;
  /// Element from its t-coefficients, low degree first. Entries must lie in
  /// [0, p) and there may be at most d of them.
  FFElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  /// Inverse of FFElement::index().
  FFElement from_index(std::uint64_t index) const;
  /// The class of t. Only meaningful for d >= 2.
  FFElement generator() const;
  /// Every element, in index order.
  std::vector<FFElement> elements() const;

  std::string name() const;

  bool operator==(const Field& other) const {
    return spec_ == other.spec_ || *spec_ == *other.spec_;
  }

 private:
  explicit Field(std::shared_ptr<const FieldSpec> spec);

  std::shared_ptr<const FieldSpec> spec_;
  std::uint64_t size_ = 0;
};

inline Field make_field(std::uint64_t p, int degree) { return Field::make(p, degree); }

/// An element of F_{p^d}. Immutable value type; operations between elements
/// of different fields throw std::invalid_argument.
class FFElement {
 public:
  const Field& field() const { return field_; }
  std::span<const std::uint64_t> coeffs() const {
    return {coeffs_.data(), static_cast<std::size_t>(field_.degree())};
  }

  /// sum c_i p^i; a bijection onto [0, p^d) that orders elements
  /// lexicographically with the highest coefficient most significant.
  std::uint64_t index() const;

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime subfield (only the constant
  /// coefficient can be nonzero).
  bool in_prime_field() const;
  /// The constant coefficient of a prime-subfield element.
  std::uint64_t to_prime() const;

  FFElement operator+(const FFElement& other) const;
  FFElement operator-(const FFElement& other) const;
  FFElement operator*(const FFElement& other) const;
  /// Throws std::domain_error on division by zero.
  FFElement operator/(const FFElement& other) const;
  FFElement operator-() const;

  FFElement& operator+=(const FFElement& other) { return *this = *this + other; }
  FFElement& operator-=(const FFElement& other) { return *this = *this - other; }
  FFElement& operator*=(const FFElement& other) { return *this = *this * other; }

  bool operator==(const FFElement& other) const;
  std::strong_ordering operator<=>(const FFElement& other) const;

  std::string to_string() const;

 private:
  friend class Field;
  FFElement(Field field, std::array<std::uint64_t, Field::kMaxDegree> coeffs)
      : field_(std::move(field)), coeffs_(coeffs) {}

  void require_same_field(const FFElement& other) const;

  Field field_;
  std::array<std::uint64_t, Field::kMaxDegree> coeffs_{};
};

/// x^n by square-and-multiply; negative n inverts first. The exponent is
/// reduced modulo p^d - 1 for nonzero x.
FFElement pow(const FFElement& x, std::int64_t n);

/// Throws std::domain_error for zero.
FFElement inv(const FFElement& x);

/// Least n >= 1 with x^n = 1, found by descending from p^d - 1 through its
/// prime factors. Throws std::domain_error for zero.
std::uint64_t mult_order(const FFElement& x);

/// x^p.
FFElement frobenius(const FFElement& x);

/// True iff x lies in F_{p^e}, i.e. x^{p^e} = x. Throws std::invalid_argument
/// unless e divides the degree of x's field.
bool in_subfield(const FFElement& x, int e);

}  // namespace galcert
