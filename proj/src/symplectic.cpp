#include "galcert/symplectic.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "galcert/number_theory.hpp"

namespace galcert {

Matrix4::Matrix4(Field field) : field_(std::move(field)) {
  if (!field_.is_prime_field()) {
    throw std::invalid_argument("Matrix4 requires a prime field, got " + field_.name());
  }
}

Matrix4 Matrix4::identity(const Field& field) { return scalar(field.one()); }

Matrix4 Matrix4::scalar(const FFElement& c) {
  Matrix4 m(c.field());
  for (int i = 0; i < 4; ++i) m.set(i, i, c);
  return m;
}

Matrix4 Matrix4::from_rows(const Field& field, const std::array<std::array<std::int64_t, 4>, 4>& rows) {
  Matrix4 m(field);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m.entries_[4 * i + j] = residue(rows[i][j], field.p());
  }
  return m;
}

FFElement Matrix4::operator()(int row, int col) const {
  return field_.element(static_cast<std::int64_t>(at(row, col)));
}

void Matrix4::set(int row, int col, const FFElement& value) {
  if (!(value.field() == field_)) throw std::invalid_argument("Matrix4::set: field mismatch");
  entries_[4 * row + col] = value.to_prime();
}

Matrix4 Matrix4::operator*(const Matrix4& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("Matrix4: field mismatch");
  const std::uint64_t p = field_.p();
  Matrix4 out(field_);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < 4; ++k) acc = (acc + mul_mod(at(i, k), other.at(k, j), p)) % p;
      out.entries_[4 * i + j] = acc;
    }
  }
  return out;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 out(field_);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out.entries_[4 * j + i] = at(i, j);
  }
  return out;
}

bool Matrix4::is_scalar() const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && at(i, j) != 0) return false;
    }
    if (at(i, i) != at(0, 0)) return false;
  }
  return true;
}

bool Matrix4::is_identity() const { return is_scalar() && at(0, 0) == 1; }

Matrix4 symplectic_form(const Field& field) {
  return Matrix4::from_rows(field, {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});
}

std::optional<FFElement> similitude(const Matrix4& m) {
  const Matrix4 j = symplectic_form(m.field());
  const Matrix4 form = m.transpose() * j * m;
  const FFElement nu = form(0, 2);
  if (form == Matrix4::scalar(nu) * j) return nu;
  return std::nullopt;
}

Matrix4 companion(const Polynomial& f) {
  if (f.degree() != 4 || !f.is_monic()) {
    throw std::invalid_argument("companion: expected a monic quartic, got " + f.to_string());
  }
  Matrix4 c(f.field());
  for (int i = 1; i < 4; ++i) c.set(i, i - 1, f.field().one());
  for (int i = 0; i < 4; ++i) c.set(i, 3, -f.coeff(i));
  return c;
}

namespace {

// Laplace expansion along the first listed row.
FFElement cofactor_det(const Matrix4& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty()) return m.field().one();
  if (rows.size() == 1) return m(rows[0], cols[0]);
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  FFElement acc = m.field().zero();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const FFElement a = m(rows[0], cols[c]);
    if (a.is_zero()) continue;
    std::vector<int> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(c));
    const FFElement term = a * cofactor_det(m, sub_rows, sub_cols);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

FFElement determinant(const Matrix4& m) { return cofactor_det(m, {0, 1, 2, 3}, {0, 1, 2, 3}); }

Polynomial charpoly(const Matrix4& m) {
  const Field& field = m.field();
  std::array<FFElement, 5> e{field.one(), field.zero(), field.zero(), field.zero(), field.zero()};
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    e[idx.size()] += cofactor_det(m, idx, idx);
  }
  // coefficient of x^{4-k} is (-1)^k e_k
  std::vector<FFElement> coeffs(5, field.zero());
  for (int k = 0; k <= 4; ++k) coeffs[4 - k] = k % 2 == 0 ? e[k] : -e[k];
  return Polynomial(field, std::move(coeffs));
}

std::uint64_t exponent_cap(std::uint64_t p) {
  try {
    std::uint64_t cap = 1;
    std::uint64_t pk = 1;
    for (int k = 1; k <= 4; ++k) {
      if (__builtin_mul_overflow(pk, p, &pk)) throw std::overflow_error("p^k");
      cap = lcm(cap, pk - 1);
    }
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(cap, p, &out)) throw std::overflow_error("cap");
    return out;
  } catch (const std::overflow_error&) {
    return UINT64_MAX;
  }
}

namespace {

template <typename Done>
std::uint64_t first_power(const Matrix4& m, Done done, const char* what) {
  if (determinant(m).is_zero()) {
    throw std::domain_error(std::string(what) + ": singular matrix");
  }
  const std::uint64_t cap = exponent_cap(m.field().p());
  Matrix4 power = m;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (done(power)) return n;
    power = power * m;
  }
  throw std::logic_error(std::string(what) + ": exponent cap exceeded");
}

}  // namespace

std::uint64_t matrix_order(const Matrix4& m) {
  return first_power(m, [](const Matrix4& x) { return x.is_identity(); }, "matrix_order");
}

std::uint64_t projective_order(const Matrix4& m) {
  return first_power(m, [](const Matrix4& x) { return x.is_scalar(); }, "projective_order");
}

std::uint64_t eigen_projective_order(const Polynomial& f) {
  if (f.degree() != 4 || !f.is_monic() || !f.field().is_prime_field()) {
    throw std::invalid_argument("eigen_projective_order: expected a monic quartic over F_p");
  }
  if (!is_squarefree(f)) {
    throw std::invalid_argument("eigen_projective_order: " + f.to_string() +
                                " is not squarefree, so it does not determine the order");
  }
  const std::vector<FFElement> roots = roots_in(f, splitting_degree(f));
  if (roots.size() != 4) throw std::logic_error("eigen_projective_order: splitting field lost roots");
  if (roots[0].is_zero()) throw std::domain_error("eigen_projective_order: zero eigenvalue");
  // r_i^n all equal  <=>  (r_i / r_0)^n = 1 for every i
  std::uint64_t n = 1;
  for (std::size_t i = 1; i < roots.size(); ++i) n = lcm(n, mult_order(roots[i] / roots[0]));
  return n;
}

}  // namespace galcert
