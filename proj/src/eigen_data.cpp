#include "galcert/eigen_data.hpp"

#include "galcert/number_theory.hpp"
#include "galcert/symplectic.hpp"

namespace galcert {

namespace {

int int_degree(const IntPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[d] == 0) --d;
  return d;
}

// q when index is q or q^2 for a prime q, otherwise nullopt.
std::optional<std::uint64_t> prime_of_index(std::int64_t index) {
  if (index < 2) return std::nullopt;
  const auto n = static_cast<std::uint64_t>(index);
  if (is_prime(n)) return n;
  std::uint64_t r = 1;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n && is_prime(r)) return r;
  return std::nullopt;
}

}  // namespace

DatasetError::DatasetError(std::string field, const std::string& message, int line)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? message : field + ": " + message)),
      field_(std::move(field)),
      line_(line) {}

void EigenformDataset::validate() const {
  if (weight < 1) throw DatasetError("weight", "must be a positive integer");
  if (level < 1) throw DatasetError("level", "must be a positive integer");
  const int deg_e = int_degree(defining_poly);
  if (deg_e < 1) throw DatasetError("defining_poly", "must have degree at least 1");
  if (defining_poly[deg_e] != 1) throw DatasetError("defining_poly", "must be monic");
  if (eigenvalues.empty()) throw DatasetError("eigenvalue", "no Frobenius data");
  for (const auto& [index, expr] : eigenvalues) {
    const std::string name = "eigenvalue " + std::to_string(index);
    const auto q = prime_of_index(index);
    if (!q) throw DatasetError(name, "index must be a prime q or a prime square q^2");
    if (int_degree(expr) >= deg_e) {
      throw DatasetError(name, "expression degree must be below the degree of the defining polynomial");
    }
    const auto qi = static_cast<std::int64_t>(*q);
    if (index == qi && !eigenvalues.contains(qi * qi)) {
      throw DatasetError("eigenvalue " + std::to_string(qi * qi),
                         "missing, but a_" + std::to_string(qi) + " is present");
    }
    if (index != qi && !eigenvalues.contains(qi)) {
      throw DatasetError("eigenvalue " + std::to_string(qi),
                         "missing, but a_" + std::to_string(index) + " is present");
    }
  }
}

std::vector<std::uint64_t> EigenformDataset::frobenius_primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [index, expr] : eigenvalues) {
    if (index >= 2 && is_prime(static_cast<std::uint64_t>(index))) out.push_back(static_cast<std::uint64_t>(index));
  }
  return out;
}

const FFElement& ResidualDataset::eigenvalue(std::int64_t index) const {
  auto it = eigenvalues.find(index);
  if (it == eigenvalues.end()) throw DatasetError("eigenvalue " + std::to_string(index), "missing");
  return it->second;
}

Polynomial reduce_mod(const IntPoly& f, const Field& field) {
  return Polynomial::from_ints(field, std::span<const std::int64_t>(f));
}

Factorization residual_roots(const IntPoly& defining_poly, std::uint64_t p) {
  if (!is_prime(p)) throw DatasetError("prime", std::to_string(p) + " is not prime");
  const int deg = int_degree(defining_poly);
  if (deg < 1) throw DatasetError("defining_poly", "must have degree at least 1");
  if (residue(defining_poly[deg], p) == 0) {
    throw DatasetError("defining_poly", "leading coefficient vanishes mod " + std::to_string(p));
  }
  return factor(reduce_mod(defining_poly, make_field(p, 1)));
}

std::vector<FFElement> embedding_roots(const Factorization& f) {
  std::vector<FFElement> out;
  for (const auto& [g, m] : f.factors) {
    if (g.degree() == 1) out.push_back(-g.coeff(0));
  }
  return out;
}

ResidualDataset specialize(const EigenformDataset& ds, std::uint64_t p, const FFElement& root) {
  const Field field = make_field(p, 1);
  if (!(root.field() == field)) {
    throw DatasetError("root", "embedding root must lie in " + field.name());
  }
  const Polynomial defining = reduce_mod(ds.defining_poly, field);
  if (defining.degree() < 1 || !is_squarefree(defining)) {
    throw DatasetError("defining_poly", "not squarefree mod " + std::to_string(p) +
                                            "; non-split residue fields are not supported");
  }
  if (!defining(root).is_zero()) {
    throw DatasetError("root", root.to_string() + " is not a root of the defining polynomial mod " +
                                   std::to_string(p));
  }
  std::map<std::int64_t, FFElement> values;
  for (const auto& [index, expr] : ds.eigenvalues) values.emplace(index, reduce_mod(expr, field)(root));
  return ResidualDataset{p, root, ds.weight, std::move(values), ds.assumptions};
}

FFElement multiplier_value(std::uint64_t q, int weight, const Field& field) {
  return pow(field.element(static_cast<std::int64_t>(q)), 2 * std::int64_t{weight} - 3);
}

Polynomial frobenius_charpoly(const FFElement& a_q, const FFElement& a_q2, std::uint64_t q, int weight) {
  const Field& field = a_q.field();
  const FFElement qq = field.element(static_cast<std::int64_t>(q));
  if (qq.is_zero()) throw std::invalid_argument("frobenius_charpoly: q must be prime to p");
  const std::int64_t k = weight;
  const FFElement c2 = a_q * a_q - a_q2 - pow(qq, 2 * k - 4);
  const FFElement c1 = -(a_q * pow(qq, 2 * k - 3));
  const FFElement c0 = pow(qq, 4 * k - 6);
  return Polynomial(field, {c0, c1, c2, -a_q, field.one()});
}

FrobeniusRecord hecke_charpoly(const ResidualDataset& rd, std::uint64_t q) {
  if (q == rd.p) throw std::invalid_argument("hecke_charpoly: Frobenius at q = p carries no characteristic polynomial");
  if (!is_prime(q)) throw std::invalid_argument("hecke_charpoly: " + std::to_string(q) + " is not prime");
  const auto qi = static_cast<std::int64_t>(q);
  Polynomial f = frobenius_charpoly(rd.eigenvalue(qi), rd.eigenvalue(qi * qi), q, rd.weight);
  Factorization fac = factor(f);
  const bool squarefree = is_squarefree(f);
  std::optional<std::uint64_t> order;
  if (squarefree) order = projective_order(companion(f));
  std::vector<FFElement> roots = roots_in(f, 1);
  return FrobeniusRecord{q,
                         rd.eigenvalue(qi),
                         rd.eigenvalue(qi * qi),
                         std::move(f),
                         std::move(fac),
                         squarefree,
                         order,
                         multiplier_value(q, rd.weight, rd.field()),
                         std::move(roots)};
}

bool validate_similitude_shape(const Polynomial& f, std::uint64_t q, int weight, std::uint64_t p) {
  if (f.degree() != 4 || !f.is_monic()) {
    throw std::invalid_argument("validate_similitude_shape: expected a monic quartic, got " + f.to_string());
  }
  if (f.field().p() != p || !f.field().is_prime_field()) {
    throw std::invalid_argument("validate_similitude_shape: polynomial is not over F_" + std::to_string(p));
  }
  const FFElement nu = multiplier_value(q, weight, f.field());
  return f.coeff(1) == f.coeff(3) * nu && f.coeff(0) == nu * nu;
}

}  // namespace galcert
