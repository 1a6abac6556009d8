#include "galcert/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "galcert/number_theory.hpp"

namespace galcert {

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<FFElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) {
      throw std::invalid_argument("polynomial coefficient from " + c.field().name() +
                                  " in a polynomial over " + field_.name());
    }
  }
  normalize();
}

Polynomial Polynomial::from_ints(const Field& field, std::span<const std::int64_t> coeffs) {
  std::vector<FFElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field.element(v));
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::constant(const FFElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FFElement& c, int n) {
  std::vector<FFElement> coeffs(static_cast<std::size_t>(n) + 1, c.field().zero());
  coeffs[n] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& other) const {
  if (!(field_ == other.field_)) {
    throw std::invalid_argument("polynomial field mismatch: " + field_.name() + " vs " +
                                other.field_.name());
  }
}

FFElement Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return coeffs_[i];
}

FFElement Polynomial::leading() const {
  if (coeffs_.empty()) return field_.zero();
  return coeffs_.back();
}

FFElement Polynomial::operator()(const FFElement& at) const {
  const Field& target = at.field();
  const bool lift = !(target == field_);
  if (lift && !(field_.is_prime_field() && target.p() == field_.p())) {
    throw std::invalid_argument("cannot evaluate a polynomial over " + field_.name() + " at an element of " +
                                target.name());
  }
  FFElement acc = target.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + (lift ? target.element(static_cast<std::int64_t>(it->to_prime())) : *it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * inv(leading());
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_field(other);
  std::vector<FFElement> out(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(int(i)) + other.coeff(int(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_field(other);
  std::vector<FFElement> out(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(int(i)) - other.coeff(int(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const { return Polynomial(field_) - *this; }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_field(other);
  if (is_zero() || other.is_zero()) return Polynomial(field_);
  std::vector<FFElement> out(coeffs_.size() + other.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const FFElement& c) const {
  std::vector<FFElement> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator/(const Polynomial& other) const { return divmod(*this, other).quotient; }

Polynomial Polynomial::operator%(const Polynomial& other) const { return divmod(*this, other).remainder; }

bool Polynomial::operator==(const Polynomial& other) const {
  return field_ == other.field_ && coeffs_ == other.coeffs_;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& other) const {
  require_same_field(other);
  if (auto cmp = degree() <=> other.degree(); cmp != 0) return cmp;
  for (int i = degree(); i >= 0; --i) {
    if (auto cmp = coeffs_[i] <=> other.coeffs_[i]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FFElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    const bool compound = cs.find('+') != std::string::npos || cs.find('t') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += compound ? "(" + cs + ")" : cs;
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!(f.field() == g.field())) throw std::invalid_argument("divmod: field mismatch");
  const Field& field = f.field();
  std::vector<FFElement> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial(field), f};
  std::vector<FFElement> quot(static_cast<std::size_t>(f.degree() - dg) + 1, field.zero());
  const FFElement lead_inv = inv(g.leading());
  for (int i = f.degree(); i >= dg; --i) {
    const FFElement c = rem[i] * lead_inv;
    if (c.is_zero()) continue;
    quot[i - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g.coeffs()[j];
  }
  rem.erase(rem.begin() + dg, rem.end());
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return Polynomial(f.field());
  std::vector<FFElement> out;
  out.reserve(f.coeffs().size() - 1);
  for (int i = 1; i <= f.degree(); ++i) out.push_back(f.coeffs()[i] * f.field().element(i));
  return Polynomial(f.field(), std::move(out));
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t exp, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field().one()) % modulus;
  Polynomial b = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exp >>= 1;
  }
  return result;
}

Polynomial embed(const Polynomial& f, const Field& extension) {
  if (f.field() == extension) return f;
  if (!f.field().is_prime_field() || f.field().p() != extension.p()) {
    throw std::invalid_argument("embed: " + f.field().name() + " is not the prime field of " +
                                extension.name());
  }
  std::vector<FFElement> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(extension.element(static_cast<std::int64_t>(c.to_prime())));
  return Polynomial(extension, std::move(out));
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  return gcd(f, derivative(f)).degree() == 0;
}

std::vector<FFElement> roots_in(const Polynomial& f, int degree) {
  if (f.is_zero()) throw std::invalid_argument("roots_in: zero polynomial");
  Field target = f.field();
  if (f.field().degree() != degree) {
    if (!f.field().is_prime_field()) {
      throw std::invalid_argument("roots_in: " + f.field().name() + " polynomial searched in degree " +
                                  std::to_string(degree));
    }
    target = make_field(f.field().p(), degree);
  }
  Polynomial g = embed(f, target);
  std::vector<FFElement> roots;
  for (const auto& r : target.elements()) {
    if (!g(r).is_zero()) continue;
    const Polynomial linear(target, {-r, target.one()});
    while (g.degree() > 0) {
      DivMod dm = divmod(g, linear);
      if (!dm.remainder.is_zero()) break;
      roots.push_back(r);
      g = std::move(dm.quotient);
    }
  }
  return roots;
}

namespace {

// Inverse Frobenius applied coefficientwise after x^{ip} -> x^i.
Polynomial pth_root(const Polynomial& f) {
  const Field& field = f.field();
  const std::uint64_t p = field.p();
  std::vector<FFElement> out;
  for (int i = 0; static_cast<std::uint64_t>(i) * p <= static_cast<std::uint64_t>(f.degree()); ++i) {
    FFElement c = f.coeff(static_cast<int>(i * p));
    for (int k = 1; k < field.degree(); ++k) c = frobenius(c);
    out.push_back(c);
  }
  return Polynomial(field, std::move(out));
}

// Squarefree parts of a monic f with their multiplicities.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial c = gcd(f, derivative(f));
  Polynomial w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial part = w / y;
    if (!part.is_one()) out.emplace_back(part, i);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) {
    const int p = static_cast<int>(f.field().p());
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(std::move(g), m * p);
  }
  return out;
}

// Products of all irreducible factors of each degree, for a squarefree monic g.
std::vector<std::pair<Polynomial, int>> distinct_degree(Polynomial g) {
  std::vector<std::pair<Polynomial, int>> out;
  const Polynomial x = Polynomial::x(g.field());
  const std::uint64_t q = g.field().size();
  Polynomial h = x % g;
  int k = 0;
  while (g.degree() >= 2 * (k + 1)) {
    ++k;
    h = pow_mod(h, q, g);
    Polynomial d = gcd(g, h - x);
    if (!d.is_one()) {
      g = g / d;
      h = h % g;
      out.emplace_back(std::move(d), k);
    }
  }
  if (g.degree() > 0) {
    const int deg = g.degree();
    out.emplace_back(std::move(g), deg);
  }
  return out;
}

// Splits a product of distinct monic irreducibles of degree k by trying every
// monic degree-k candidate in turn.
std::vector<Polynomial> equal_degree(Polynomial g, int k) {
  std::vector<Polynomial> out;
  if (g.degree() == k) {
    out.push_back(std::move(g));
    return out;
  }
  const Field& field = g.field();
  if (k == 1) {
    for (const auto& r : roots_in(g, field.degree())) out.emplace_back(field, std::vector<FFElement>{-r, field.one()});
    return out;
  }
  const std::uint64_t q = field.size();
  std::uint64_t candidates = 1;
  for (int i = 0; i < k; ++i) {
    if (candidates > (std::uint64_t{1} << 24) / q) {
      throw std::length_error("factor: equal-degree search space too large over " + field.name());
    }
    candidates *= q;
  }
  for (std::uint64_t idx = 0; idx < candidates && g.degree() > k; ++idx) {
    std::vector<FFElement> c;
    std::uint64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      c.push_back(field.from_index(rest % q));
      rest /= q;
    }
    c.push_back(field.one());
    Polynomial cand(field, std::move(c));
    DivMod dm = divmod(g, cand);
    if (dm.remainder.is_zero()) {
      out.push_back(std::move(cand));
      g = std::move(dm.quotient);
    }
  }
  out.push_back(std::move(g));
  return out;
}

}  // namespace

Polynomial Factorization::expand() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& [g, m] : factors) {
    for (int i = 0; i < m; ++i) out = out * g;
  }
  return out;
}

std::string Factorization::to_string() const {
  std::string out;
  if (!unit.is_one() || factors.empty()) out += unit.to_string();
  for (const auto& [g, m] : factors) {
    out += "(" + g.to_string() + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

Factorization factor(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Factorization result{f.leading(), {}};
  const Polynomial g = f.monic();
  if (g.degree() == 0) return result;
  for (const auto& [part, mult] : squarefree_decomposition(g)) {
    for (const auto& [block, k] : distinct_degree(part)) {
      for (auto& irr : equal_degree(block, k)) result.factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant or zero polynomial");
  const int n = f.degree();
  if (n == 1) return true;
  const Polynomial g = f.monic();
  const Polynomial x = Polynomial::x(g.field());
  const std::uint64_t q = g.field().size();
  // powers[k] = x^{q^k} mod g
  std::vector<Polynomial> powers{x % g};
  for (int k = 1; k <= n; ++k) powers.push_back(pow_mod(powers.back(), q, g));
  if (!(powers[n] == x % g)) return false;
  for (const auto& [r, e] : factor_integer(static_cast<std::uint64_t>(n))) {
    if (gcd(g, powers[n / static_cast<int>(r)] - x).degree() != 0) return false;
  }
  return true;
}

Polynomial conjugate_poly(const Polynomial& g) {
  std::vector<FFElement> out;
  out.reserve(g.coeffs().size());
  for (const auto& c : g.coeffs()) out.push_back(frobenius(c));
  return Polynomial(g.field(), std::move(out));
}

int splitting_degree(const Polynomial& f) {
  std::uint64_t e = 1;
  for (const auto& [g, m] : factor(f).factors) e = lcm(e, static_cast<std::uint64_t>(g.degree()));
  return static_cast<int>(e);
}

}  // namespace galcert
