#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galcert/eigen_data.hpp"

namespace galcert {

enum class CheckStatus { kPass, kFail };
enum class Verdict { kLargeImage, kInconclusive };

std::string to_string(CheckStatus s);
std::string to_string(Verdict v);

namespace check_names {
inline constexpr const char* kLinearConstituent = "linear_constituent";
inline constexpr const char* kRational22Split = "rational_22_split";
inline constexpr const char* kConjugate22Split = "conjugate_22_split";
inline constexpr const char* kPrimitivity = "primitivity";
inline constexpr const char* kExceptional = "exceptional";
inline constexpr const char* kMultiplierSurjective = "multiplier_surjective";
}  // namespace check_names

/// Outcome of one sufficient condition. A failing check proves nothing about
/// the image; it only means this route found no witness.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::vector<std::uint64_t> witnesses;
  std::string justification;
  /// Facts used, as printable key/value pairs.
  std::map<std::string, std::string> data;

  bool passed() const { return status == CheckStatus::kPass; }
};

struct ExceptionalGroup {
  std::string name;
  std::uint64_t order = 0;
};

/// Maximal subgroups of PGSp(4, p) outside the geometric classes, by order.
struct ExceptionalTable {
  std::uint64_t p = 0;
  std::vector<ExceptionalGroup> entries;

  /// The table for p = 7: PGL(2,7), 2^4.O_4^-(2).2 and A_7.2. Throws
  /// std::invalid_argument for any other p.
  static ExceptionalTable builtin(std::uint64_t p);
};

struct Certificate {
  int weight = 0;
  int level = 0;
  IntPoly defining_poly;
  std::string defining_poly_digest;
  std::uint64_t p = 0;
  std::uint64_t root = 0;
  std::vector<FrobeniusRecord> records;
  std::vector<CheckResult> checks;
  std::vector<std::string> hypotheses;
  Verdict verdict = Verdict::kInconclusive;
};

/// (a), one-dimensional constituents: any character unramified outside p is
/// a power of the cyclotomic character, so every Frobenius polynomial would
/// have a root in F_p. Witnesses are all records without such a root.
CheckResult check_linear_constituent(const std::vector<FrobeniusRecord>& records);

/// 2 * lcm(p(p-1), p^2-1, p-1): bounds element orders in the stabilizer of an
/// F_p-rational 2+2 decomposition, swap included.
std::uint64_t decomposition_exponent(std::uint64_t p);

/// (a), F_p-rational 2+2 decomposition: a projective order not dividing
/// decomposition_exponent(p) rules it out.
CheckResult check_rational_22_split(const std::vector<FrobeniusRecord>& records);

/// Number of root pairings {r_i, r_j} | {r_k, r_l} of a squarefree quartic
/// over F_p compatible with two components conjugate under Gal(F_{p^2}/F_p)
/// with F_p-rational determinant.
int admissible_conjugate_pairings(const Polynomial& f);

/// (a), 2+2 decomposition defined only over F_{p^2}: passes when some
/// squarefree record admits no conjugate pairing.
CheckResult check_conjugate_22_split(const std::vector<FrobeniusRecord>& records);

/// (b), imprimitivity: the index-2 subgroup would cut out Q(sqrt(-p)), so
/// Frobenius at inert primes would have trace 0. Examines the smallest inert
/// prime in the data. Requires p = 3 mod 4 (std::invalid_argument otherwise).
CheckResult check_primitivity(const ResidualDataset& rd);

/// (c), Lagrange: a projective order dividing none of the exceptional group
/// orders excludes all of them. Throws std::invalid_argument on a p mismatch.
CheckResult check_exceptional(const std::vector<FrobeniusRecord>& records, const ExceptionalTable& table);

/// The multiplier chi^{2k-3} is onto F_p^* iff gcd(2k-3, p-1) = 1.
CheckResult check_multiplier_surjective(int weight, std::uint64_t p);

/// Specializes at `root`, builds a record for every prime q != p in the data,
/// runs all six checks and assembles the certificate.
Certificate certify(const EigenformDataset& ds, std::uint64_t p, std::uint64_t root,
                    const ExceptionalTable& table);
Certificate certify(const EigenformDataset& ds, std::uint64_t p, std::uint64_t root);

/// FNV-1a over the canonical text of an integer polynomial.
std::string poly_digest(const IntPoly& f);

/// "x^3 - x^2 - 294086x - 59412960"
std::string int_poly_to_string(const IntPoly& f);

}  // namespace galcert
