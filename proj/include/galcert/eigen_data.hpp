#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "galcert/finite_field.hpp"
#include "galcert/polynomial.hpp"

namespace galcert {

/// Raised for malformed or inconsistent eigenform data. `field` names the
/// offending entry (e.g. "eigenvalue 9"); `line` is set by the file reader.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::string field, const std::string& message, int line = 0);

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Hypotheses declared by whoever supplied the data. They are carried into
/// every certificate and never checked here.
struct Assumptions {
  bool not_maass_spezialform = false;
  bool conductor_one = false;

  bool operator==(const Assumptions&) const = default;
};

/// Integer polynomial, constant term first.
using IntPoly = std::vector<std::int64_t>;

/// Hecke eigenvalue data of a genus-2 Siegel eigenform. Eigenvalues are
/// polynomials in a root alpha of `defining_poly`, keyed by index (q or q^2).
struct EigenformDataset {
  int weight = 0;
  int level = 1;
  IntPoly defining_poly;
  std::map<std::int64_t, IntPoly> eigenvalues;
  Assumptions assumptions;

  /// Throws DatasetError on the first violated invariant.
  void validate() const;

  /// Primes q with a_q present, ascending.
  std::vector<std::uint64_t> frobenius_primes() const;
};

/// The dataset pushed into F_p along alpha -> root.
struct ResidualDataset {
  std::uint64_t p = 0;
  FFElement root;
  int weight = 0;
  std::map<std::int64_t, FFElement> eigenvalues;
  Assumptions assumptions;

  const Field& field() const { return root.field(); }
  /// Throws DatasetError if the index is absent.
  const FFElement& eigenvalue(std::int64_t index) const;
};

struct FrobeniusRecord {
  std::uint64_t q = 0;
  FFElement a_q;
  FFElement a_q2;
  Polynomial charpoly;
  Factorization factorization;
  bool squarefree = false;
  /// Present iff squarefree.
  std::optional<std::uint64_t> projective_order;
  /// q^{2k-3} mod p
  FFElement similitude;
  /// Roots in F_p, with multiplicity.
  std::vector<FFElement> prime_field_roots;
};

Polynomial reduce_mod(const IntPoly& f, const Field& field);

/// Factorization of the defining polynomial mod p. Throws DatasetError when p
/// divides the leading coefficient or is not prime.
Factorization residual_roots(const IntPoly& defining_poly, std::uint64_t p);

/// Roots of the linear factors, in factor order: the embeddings E -> F_p.
std::vector<FFElement> embedding_roots(const Factorization& f);

/// Evaluates every eigenvalue expression at `root`. Refuses when the
/// defining polynomial is not squarefree mod p or `root` is not one of its
/// roots.
ResidualDataset specialize(const EigenformDataset& ds, std::uint64_t p, const FFElement& root);

/// q^{2k-3} in the given prime field.
FFElement multiplier_value(std::uint64_t q, int weight, const Field& field);

/// x^4 - a x^3 + (a^2 - b - q^{2k-4}) x^2 - a q^{2k-3} x + q^{4k-6} with
/// a = a_q and b = a_{q^2}. Exponents are reduced mod p - 1 first.
Polynomial frobenius_charpoly(const FFElement& a_q, const FFElement& a_q2, std::uint64_t q, int weight);

/// Builds the record for Frob q. Throws DatasetError for missing eigenvalues
/// and std::invalid_argument for q = p.
FrobeniusRecord hecke_charpoly(const ResidualDataset& rd, std::uint64_t q);

/// c_1 = c_3 nu and c_0 = nu^2 with nu = q^{2k-3} mod p.
bool validate_similitude_shape(const Polynomial& f, std::uint64_t q, int weight, std::uint64_t p);

}  // namespace galcert
