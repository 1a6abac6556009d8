#include "galcert/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "galcert/number_theory.hpp"

namespace galcert {

namespace {

using Coeffs = std::vector<std::uint64_t>;

// Remainder of f modulo a monic g, both over F_p, low degree first.
Coeffs rem_monic(Coeffs f, const Coeffs& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    if (lead != 0) {
      const std::size_t shift = f.size() - 1 - dg;
      for (std::size_t j = 0; j < dg; ++j) {
        f[shift + j] = (f[shift + j] + p - mul_mod(lead, g[j], p)) % p;
      }
    }
    f.pop_back();
  }
  return f;
}

bool is_zero_poly(const Coeffs& f) {
  for (auto c : f) {
    if (c != 0) return false;
  }
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2. Only used to
// pick moduli of degree <= 4, so the search is tiny.
bool irreducible_by_trial_division(const Coeffs& f, std::uint64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= n; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(k + 1, 0);
      std::uint64_t rest = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[k] = 1;
      if (is_zero_poly(rem_monic(f, g, p))) return false;
    }
  }
  return true;
}

Coeffs canonical_modulus(std::uint64_t p, int degree) {
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  // Enumerate with the x^{d-1} coefficient most significant so that the scan
  // visits candidates in high-degree-first lexicographic order.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(degree + 1, 0);
    std::uint64_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[degree] = 1;
    if (irreducible_by_trial_division(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Field::Field(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {
  size_ = 1;
  for (int i = 0; i < spec_->degree; ++i) size_ *= spec_->p;
}

Field Field::make(std::uint64_t p, int degree) {
  if (!is_prime(p)) {
    throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  }
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("make_field: unsupported extension degree " +
                                std::to_string(degree));
  }
  unsigned __int128 size = 1;
  for (int i = 0; i < degree; ++i) size *= p;
  if (p >= (std::uint64_t{1} << 32) || size > UINT64_MAX) {
    throw std::invalid_argument("make_field: field too large for 64-bit arithmetic");
  }

  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const FieldSpec>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, degree}];
  if (!slot) {
    FieldSpec spec{p, degree, {}};
    if (degree > 1) spec.modulus = canonical_modulus(p, degree);
    slot = std::make_shared<const FieldSpec>(std::move(spec));
  }
  return Field(slot);
}

FFElement Field::zero() const { return FFElement(*this, {}); }

FFElement Field::one() const { return element(1); }

FFElement Field::element(std::int64_t value) const {
  std::array<std::uint64_t, kMaxDegree> c{};
  c[0] = residue(value, p());
  return FFElement(*this, c);
}

FFElement Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(degree())) {
    throw std::invalid_argument("from_coeffs: too many coefficients for " + name());
  }
  std::array<std::uint64_t, kMaxDegree> c{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p()) throw std::invalid_argument("from_coeffs: coefficient out of range");
    c[i] = coeffs[i];
  }
  return FFElement(*this, c);
}

FFElement Field::from_index(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("from_index: index exceeds field size");
  std::array<std::uint64_t, kMaxDegree> c{};
  for (int i = 0; i < degree(); ++i) {
    c[i] = index % p();
    index /= p();
  }
  return FFElement(*this, c);
}

FFElement Field::generator() const {
  if (degree() == 1) throw std::invalid_argument("generator: prime field has no extension generator");
  std::array<std::uint64_t, kMaxDegree> c{};
  c[1] = 1;
  return FFElement(*this, c);
}

std::vector<FFElement> Field::elements() const {
  std::vector<FFElement> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(from_index(i));
  return out;
}

std::string Field::name() const {
  if (degree() == 1) return "F_" + std::to_string(p());
  return "F_" + std::to_string(p()) + "^" + std::to_string(degree());
}

void FFElement::require_same_field(const FFElement& other) const {
  if (!(field_ == other.field_)) {
    throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
}

std::uint64_t FFElement::index() const {
  std::uint64_t idx = 0;
  for (int i = field_.degree() - 1; i >= 0; --i) idx = idx * field_.p() + coeffs_[i];
  return idx;
}

bool FFElement::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool FFElement::is_one() const { return in_prime_field() && coeffs_[0] == 1; }

bool FFElement::in_prime_field() const {
  for (int i = 1; i < Field::kMaxDegree; ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::uint64_t FFElement::to_prime() const {
  if (!in_prime_field()) {
    throw std::domain_error("to_prime: " + to_string() + " is not in the prime field");
  }
  return coeffs_[0];
}

FFElement FFElement::operator+(const FFElement& other) const {
  require_same_field(other);
  const std::uint64_t p = field_.p();
  auto c = coeffs_;
  for (int i = 0; i < field_.degree(); ++i) c[i] = (c[i] + other.coeffs_[i]) % p;
  return FFElement(field_, c);
}

FFElement FFElement::operator-(const FFElement& other) const {
  require_same_field(other);
  const std::uint64_t p = field_.p();
  auto c = coeffs_;
  for (int i = 0; i < field_.degree(); ++i) c[i] = (c[i] + p - other.coeffs_[i]) % p;
  return FFElement(field_, c);
}

FFElement FFElement::operator-() const { return field_.zero() - *this; }

FFElement FFElement::operator*(const FFElement& other) const {
  require_same_field(other);
  const std::uint64_t p = field_.p();
  const int d = field_.degree();
  std::array<std::uint64_t, 2 * Field::kMaxDegree - 1> prod{};
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(coeffs_[i], other.coeffs_[j], p)) % p;
    }
  }
  const auto& m = field_.modulus();
  for (int i = 2 * d - 2; i >= d; --i) {
    const std::uint64_t lead = prod[i];
    if (lead == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < d; ++j) {
      prod[i - d + j] = (prod[i - d + j] + p - mul_mod(lead, m[j], p)) % p;
    }
  }
  std::array<std::uint64_t, Field::kMaxDegree> c{};
  for (int i = 0; i < d; ++i) c[i] = prod[i];
  return FFElement(field_, c);
}

FFElement FFElement::operator/(const FFElement& other) const {
  require_same_field(other);
  return *this * inv(other);
}

bool FFElement::operator==(const FFElement& other) const {
  return field_ == other.field_ && coeffs_ == other.coeffs_;
}

std::strong_ordering FFElement::operator<=>(const FFElement& other) const {
  require_same_field(other);
  return index() <=> other.index();
}

std::string FFElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = field_.degree() - 1; i >= 0; --i) {
    const std::uint64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

FFElement pow(const FFElement& x, std::int64_t n) {
  const Field& field = x.field();
  if (x.is_zero()) {
    if (n < 0) throw std::domain_error("pow: negative power of zero");
    return n == 0 ? field.one() : field.zero();
  }
  const std::uint64_t group = field.size() - 1;
  // Fermat: x^(p^d - 1) = 1, so only n mod (p^d - 1) matters.
  std::uint64_t e = n >= 0 ? static_cast<std::uint64_t>(n) % group : residue(n, group);
  FFElement result = field.one();
  FFElement base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FFElement inv(const FFElement& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero in " + x.field().name());
  return pow(x, static_cast<std::int64_t>(x.field().size() - 2));
}

std::uint64_t mult_order(const FFElement& x) {
  if (x.is_zero()) throw std::domain_error("mult_order: zero has no multiplicative order");
  std::uint64_t order = x.field().size() - 1;
  for (const auto& [prime, exponent] : factor_integer(order)) {
    for (int i = 0; i < exponent; ++i) {
      if (!pow(x, static_cast<std::int64_t>(order / prime)).is_one()) break;
      order /= prime;
    }
  }
  return order;
}

FFElement frobenius(const FFElement& x) {
  return pow(x, static_cast<std::int64_t>(x.field().p()));
}

bool in_subfield(const FFElement& x, int e) {
  const int d = x.field().degree();
  if (e < 1 || d % e != 0) {
    throw std::invalid_argument("in_subfield: " + std::to_string(e) + " does not divide " +
                                std::to_string(d));
  }
  FFElement y = x;
  for (int i = 0; i < e; ++i) y = frobenius(y);
  return y == x;
}

}  // namespace galcert
