#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "galcert/finite_field.hpp"
#include "galcert/polynomial.hpp"

namespace galcert {

/// 4x4 matrix over a prime field F_p. Entries are stored as residues.
class Matrix4 {
 public:
  /// Zero matrix. Throws std::invalid_argument unless the field is prime.
  explicit Matrix4(Field field);

  static Matrix4 identity(const Field& field);
  static Matrix4 scalar(const FFElement& c);
  static Matrix4 from_rows(const Field& field, const std::array<std::array<std::int64_t, 4>, 4>& rows);

  const Field& field() const { return field_; }
  FFElement operator()(int row, int col) const;
  void set(int row, int col, const FFElement& value);

  Matrix4 operator*(const Matrix4& other) const;
  Matrix4 transpose() const;
  bool is_scalar() const;
  bool is_identity() const;

  bool operator==(const Matrix4& other) const {
    return field_ == other.field_ && entries_ == other.entries_;
  }

 private:
  std::uint64_t at(int row, int col) const { return entries_[4 * row + col]; }

  Field field_;
  std::array<std::uint64_t, 16> entries_{};
};

/// The alternating form J = [[0, I], [-I, 0]].
Matrix4 symplectic_form(const Field& field);

/// nu with M^T J M = nu J, if such a scalar exists.
std::optional<FFElement> similitude(const Matrix4& m);

/// Companion matrix: ones on the subdiagonal, last column -c_0 .. -c_3.
/// Throws std::invalid_argument unless f is a monic quartic over a prime field.
Matrix4 companion(const Polynomial& f);

/// x^4 - e1 x^3 + e2 x^2 - e3 x + e4 where e_k sums the k x k principal
/// minors. Division-free, so valid in every characteristic.
Polynomial charpoly(const Matrix4& m);

FFElement determinant(const Matrix4& m);

/// p * lcm(p-1, p^2-1, p^3-1, p^4-1); every element of GL(4, p) has order
/// dividing it. Saturates at UINT64_MAX.
std::uint64_t exponent_cap(std::uint64_t p);

/// Least n >= 1 with M^n = I. Throws std::domain_error for singular M and
/// std::logic_error if the exponent cap is reached.
std::uint64_t matrix_order(const Matrix4& m);

/// Least n >= 1 with M^n scalar. Same error contract as matrix_order.
std::uint64_t projective_order(const Matrix4& m);

/// Projective order of any matrix with squarefree characteristic polynomial
/// f, computed from the roots r_i of f in its splitting field: the least n
/// with r_1^n = ... = r_4^n. Throws std::invalid_argument when f is not a
/// squarefree monic quartic over F_p.
std::uint64_t eigen_projective_order(const Polynomial& f);

}  // namespace galcert
