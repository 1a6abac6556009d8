#include "galcert/certifier.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "galcert/number_theory.hpp"

namespace galcert {

namespace {

std::string key(std::uint64_t q, const char* fact) { return "q" + std::to_string(q) + "." + fact; }

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ", ") + std::to_string(x);
  return out;
}

std::string join(const std::vector<FFElement>& xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x.to_string();
  return out;
}

std::string field_name(std::uint64_t p) { return "F_" + std::to_string(p); }

std::uint64_t field_char(const std::vector<FrobeniusRecord>& records) {
  return records.empty() ? 0 : records.front().charpoly.field().p();
}

}  // namespace

std::string to_string(CheckStatus s) { return s == CheckStatus::kPass ? "pass" : "fail"; }

std::string to_string(Verdict v) { return v == Verdict::kLargeImage ? "LARGE_IMAGE" : "INCONCLUSIVE"; }

ExceptionalTable ExceptionalTable::builtin(std::uint64_t p) {
  if (p != 7) {
    throw std::invalid_argument("no built-in exceptional subgroup table for p = " + std::to_string(p));
  }
  // |PGL(2,7)| = 7(7^2 - 1); |O_4^-(2)| = 120; |S_7| = 7!
  return ExceptionalTable{7, {{"PGL(2,7)", 336}, {"2^4.O_4^-(2).2", 16 * 120 * 2}, {"A_7.2", 5040}}};
}

CheckResult check_linear_constituent(const std::vector<FrobeniusRecord>& records) {
  CheckResult r;
  r.name = check_names::kLinearConstituent;
  const std::uint64_t p = field_char(records);
  for (const auto& rec : records) {
    r.data[key(rec.q, "fp_roots")] = join(rec.prime_field_roots);
    if (rec.prime_field_roots.empty()) r.witnesses.push_back(rec.q);
  }
  if (!r.witnesses.empty()) {
    r.status = CheckStatus::kPass;
    r.justification = "Frobenius at q = " + join(r.witnesses) + " has no eigenvalue in " + field_name(p) +
                      ". A one-dimensional constituent would be a power of the mod-" + std::to_string(p) +
                      " cyclotomic character, the only characters unramified outside " + std::to_string(p) +
                      ", and would give every Frobenius an eigenvalue in " + field_name(p) + ".";
  } else {
    r.justification = records.empty() ? "no Frobenius records available"
                                      : "every characteristic polynomial has a root in " + field_name(p) +
                                            "; a character constituent is not excluded";
  }
  return r;
}

std::uint64_t decomposition_exponent(std::uint64_t p) {
  return 2 * lcm(lcm(p * (p - 1), p * p - 1), p - 1);
}

CheckResult check_rational_22_split(const std::vector<FrobeniusRecord>& records) {
  CheckResult r;
  r.name = check_names::kRational22Split;
  const std::uint64_t p = field_char(records);
  bool any_order = false;
  if (p != 0) r.data["exponent_bound"] = std::to_string(decomposition_exponent(p));
  for (const auto& rec : records) {
    if (!rec.projective_order) continue;
    any_order = true;
    const std::uint64_t o = *rec.projective_order;
    r.data[key(rec.q, "projective_order")] = std::to_string(o);
    if (r.witnesses.empty() && decomposition_exponent(p) % o != 0) r.witnesses.push_back(rec.q);
  }
  if (!r.witnesses.empty()) {
    const std::uint64_t q = r.witnesses.front();
    const auto& o = r.data[key(q, "projective_order")];
    r.status = CheckStatus::kPass;
    r.justification = "Frobenius at q = " + std::to_string(q) + " has projective order " + o +
                      ", which does not divide " + r.data["exponent_bound"] +
                      ", the exponent bound for the stabilizer of a 2+2 decomposition over " + field_name(p) +
                      " (two copies of GL(2," + std::to_string(p) + ") with the swap).";
  } else {
    r.justification = any_order ? "every projective order divides the 2+2 stabilizer exponent bound"
                                : "no order witnesses available";
  }
  return r;
}

int admissible_conjugate_pairings(const Polynomial& f) {
  if (!f.field().is_prime_field() || f.degree() != 4) {
    throw std::invalid_argument("admissible_conjugate_pairings: expected a quartic over F_p");
  }
  const std::vector<FFElement> roots = roots_in(f, 4);
  // g * conj(g) with g over F_{p^2} always splits over F_{p^4}.
  if (roots.size() != 4) return 0;
  const Field& ext = roots.front().field();
  auto quadratic = [&](const FFElement& a, const FFElement& b) {
    return Polynomial(ext, {a * b, -(a + b), ext.one()});
  };
  constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  int admissible = 0;
  for (const auto& idx : kPairings) {
    const Polynomial g = quadratic(roots[idx[0]], roots[idx[1]]);
    const Polynomial h = quadratic(roots[idx[2]], roots[idx[3]]);
    const bool over_fp2 = in_subfield(g.coeff(0), 2) && in_subfield(g.coeff(1), 2);
    const bool rational_det = in_subfield(g.coeff(0), 1);
    if (over_fp2 && rational_det && h == conjugate_poly(g)) ++admissible;
  }
  return admissible;
}

CheckResult check_conjugate_22_split(const std::vector<FrobeniusRecord>& records) {
  CheckResult r;
  r.name = check_names::kConjugate22Split;
  const std::uint64_t p = field_char(records);
  bool any_squarefree = false;
  for (const auto& rec : records) {
    if (!rec.squarefree) continue;
    any_squarefree = true;
    const int n = admissible_conjugate_pairings(rec.charpoly);
    r.data[key(rec.q, "admissible_pairings")] = std::to_string(n);
    if (n == 0 && r.witnesses.empty()) r.witnesses.push_back(rec.q);
  }
  if (!r.witnesses.empty()) {
    const std::uint64_t q = r.witnesses.front();
    r.status = CheckStatus::kPass;
    r.justification = "no pairing of the eigenvalues of Frobenius at q = " + std::to_string(q) +
                      " splits its characteristic polynomial as g * conj(g) with g over F_" + std::to_string(p) +
                      "^2 and det g in " + field_name(p) +
                      ", so the representation is not a sum of two Galois-conjugate planes.";
  } else {
    r.justification = any_squarefree ? "every squarefree characteristic polynomial admits a conjugate pairing"
                                     : "no squarefree characteristic polynomial available";
  }
  return r;
}

CheckResult check_primitivity(const ResidualDataset& rd) {
  if (rd.p % 4 != 3) {
    throw std::invalid_argument("check_primitivity: only p = 3 mod 4 is supported, got p = " + std::to_string(rd.p));
  }
  CheckResult r;
  r.name = check_names::kPrimitivity;
  std::vector<std::uint64_t> inert;
  for (const auto& [index, value] : rd.eigenvalues) {
    const auto q = static_cast<std::uint64_t>(index);
    if (q == rd.p || !is_prime(q)) continue;
    const int symbol = legendre(static_cast<std::int64_t>(q), rd.p);
    r.data[key(q, "legendre")] = std::to_string(symbol);
    if (symbol == -1) {
      inert.push_back(q);
      r.data[key(q, "trace")] = value.to_string();
    }
  }
  const std::string field = "Q(sqrt(-" + std::to_string(rd.p) + "))";
  if (inert.empty()) {
    r.justification = "no prime inert in " + field + " in the data";
    return r;
  }
  const std::uint64_t q = inert.front();
  const FFElement& trace = rd.eigenvalue(static_cast<std::int64_t>(q));
  if (!trace.is_zero()) {
    r.status = CheckStatus::kPass;
    r.witnesses.push_back(q);
    r.justification = "an imprimitive image has an index-2 reducible subgroup cutting out " + field +
                      ", the only quadratic field unramified outside " + std::to_string(rd.p) +
                      "; q = " + std::to_string(q) + " is inert there, so a_" + std::to_string(q) +
                      " would vanish, but a_" + std::to_string(q) + " = " + trace.to_string() + ".";
  } else {
    r.justification = "a_" + std::to_string(q) + " = 0 at the first inert prime q = " + std::to_string(q) +
                      "; imprimitivity is not excluded";
  }
  return r;
}

CheckResult check_exceptional(const std::vector<FrobeniusRecord>& records, const ExceptionalTable& table) {
  const std::uint64_t p = field_char(records);
  if (p != 0 && table.p != p) {
    throw std::invalid_argument("check_exceptional: table for p = " + std::to_string(table.p) +
                                " used with p = " + std::to_string(p));
  }
  CheckResult r;
  r.name = check_names::kExceptional;
  for (const auto& g : table.entries) r.data["order." + g.name] = std::to_string(g.order);
  bool any_order = false;
  for (const auto& rec : records) {
    if (!rec.projective_order) continue;
    any_order = true;
    const std::uint64_t o = *rec.projective_order;
    r.data[key(rec.q, "projective_order")] = std::to_string(o);
    const bool excludes = std::none_of(table.entries.begin(), table.entries.end(),
                                       [o](const ExceptionalGroup& g) { return g.order % o == 0; });
    if (excludes && r.witnesses.empty()) r.witnesses.push_back(rec.q);
  }
  if (!r.witnesses.empty()) {
    const std::uint64_t q = r.witnesses.front();
    r.status = CheckStatus::kPass;
    r.justification = "Frobenius at q = " + std::to_string(q) + " has projective order " +
                      r.data[key(q, "projective_order")] +
                      ", which divides none of the exceptional subgroup orders; by Lagrange none of them contains "
                      "the projective image.";
  } else {
    r.justification = any_order ? "every projective order divides some exceptional subgroup order"
                                : "no order witnesses available";
  }
  return r;
}

CheckResult check_multiplier_surjective(int weight, std::uint64_t p) {
  CheckResult r;
  r.name = check_names::kMultiplierSurjective;
  const std::int64_t exponent = 2 * std::int64_t{weight} - 3;
  const std::uint64_t g = gcd(static_cast<std::uint64_t>(std::llabs(exponent)), p - 1);
  r.data["exponent"] = std::to_string(exponent);
  r.data["gcd"] = std::to_string(g);
  if (g != 1) {
    r.justification = "gcd(2k-3, p-1) = " + std::to_string(g) + ", so chi^(2k-3) is not onto F_" +
                      std::to_string(p) + "^*";
    return r;
  }
  const Field field = make_field(p, 1);
  for (std::uint64_t q = 2;; ++q) {
    if (q == p || !is_prime(q)) continue;
    const FFElement qq = field.element(static_cast<std::int64_t>(q));
    if (mult_order(qq) != p - 1) continue;
    const FFElement nu = multiplier_value(q, weight, field);
    r.witnesses.push_back(q);
    r.data[key(q, "multiplier")] = nu.to_string();
    r.data[key(q, "multiplier_order")] = std::to_string(mult_order(nu));
    break;
  }
  r.status = CheckStatus::kPass;
  r.justification = "gcd(2k-3, p-1) = 1, so the multiplier chi^(2k-3) maps onto F_" + std::to_string(p) +
                    "^*; with F_" + std::to_string(p) +
                    " of odd degree, a projective image containing PSp(4," + std::to_string(p) +
                    ") is all of PGSp(4," + std::to_string(p) + ").";
  return r;
}

Certificate certify(const EigenformDataset& ds, std::uint64_t p, std::uint64_t root,
                    const ExceptionalTable& table) {
  ds.validate();
  if (!is_prime(p)) throw DatasetError("prime", std::to_string(p) + " is not prime");
  if (root >= p) throw DatasetError("root", "must lie in [0, " + std::to_string(p) + ")");
  const Field field = make_field(p, 1);
  const ResidualDataset rd = specialize(ds, p, field.element(static_cast<std::int64_t>(root)));

  Certificate cert;
  cert.weight = ds.weight;
  cert.level = ds.level;
  cert.defining_poly = ds.defining_poly;
  cert.defining_poly_digest = poly_digest(ds.defining_poly);
  cert.p = p;
  cert.root = root;
  for (auto q : ds.frobenius_primes()) {
    if (q != p) cert.records.push_back(hecke_charpoly(rd, q));
  }

  cert.checks.push_back(check_linear_constituent(cert.records));
  cert.checks.push_back(check_rational_22_split(cert.records));
  cert.checks.push_back(check_conjugate_22_split(cert.records));
  cert.checks.push_back(check_primitivity(rd));
  cert.checks.push_back(check_exceptional(cert.records, table));
  cert.checks.push_back(check_multiplier_surjective(ds.weight, p));

  const auto declared = [](bool flag) { return flag ? " (declared by the data provider)" : " (not declared)"; };
  cert.hypotheses = {
      std::string("the eigenform is not a Maass Spezialform") + declared(ds.assumptions.not_maass_spezialform),
      std::string("the compatible system of Galois representations has conductor 1") +
          declared(ds.assumptions.conductor_one),
      "reducing characteristic polynomial coefficients along alpha -> " + std::to_string(root) +
          " computes the residual representation (assumed)",
      "the list of maximal subgroups of PGSp(4," + std::to_string(p) + ") behind the exceptional table (assumed)",
  };
  const bool all_pass =
      std::all_of(cert.checks.begin(), cert.checks.end(), [](const CheckResult& c) { return c.passed(); });
  cert.verdict = all_pass ? Verdict::kLargeImage : Verdict::kInconclusive;
  return cert;
}

Certificate certify(const EigenformDataset& ds, std::uint64_t p, std::uint64_t root) {
  return certify(ds, p, root, ExceptionalTable::builtin(p));
}

std::string int_poly_to_string(const IntPoly& f) {
  std::string out;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    const std::int64_t c = f[i];
    if (c == 0) continue;
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string poly_digest(const IntPoly& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : int_poly_to_string(f)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace galcert
