#include "galcert/report.hpp"

#include <sstream>

namespace galcert {

namespace {

std::string join_witnesses(const std::vector<std::uint64_t>& ws) {
  if (ws.empty()) return "none";
  std::string out;
  for (auto w : ws) out += (out.empty() ? "" : ", ") + std::to_string(w);
  return out;
}

std::string join_roots(const std::vector<FFElement>& roots) {
  if (roots.empty()) return "none";
  std::string out;
  for (const auto& r : roots) out += (out.empty() ? "" : ", ") + r.to_string();
  return out;
}

}  // namespace

std::string conclusion(const Certificate& cert) {
  const std::string p = std::to_string(cert.p);
  if (cert.verdict == Verdict::kLargeImage) {
    return "the residual mod-" + p + " representation has projective image PGSp(4," + p +
           "), a non-solvable group; its fixed field is an extension of Q ramified only at " + p +
           ", conditional on the hypotheses above";
  }
  std::string failing;
  for (const auto& c : cert.checks) {
    if (!c.passed()) failing += (failing.empty() ? "" : ", ") + c.name;
  }
  return "no claim about the image; checks without a witness: " + failing;
}

std::string to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "residual image certificate\n";
  out << "  weight: " << cert.weight << "\n";
  out << "  level: " << cert.level << "\n";
  out << "  defining polynomial: " << int_poly_to_string(cert.defining_poly) << "\n";
  out << "  digest: " << cert.defining_poly_digest << "\n";
  out << "  p: " << cert.p << "\n";
  out << "  embedding: alpha -> " << cert.root << "\n";

  out << "\nfrobenius records\n";
  for (const auto& rec : cert.records) {
    out << "  q = " << rec.q << "\n";
    out << "    a_q: " << rec.a_q.to_string() << "\n";
    out << "    a_q2: " << rec.a_q2.to_string() << "\n";
    out << "    charpoly: " << rec.charpoly.to_string() << "\n";
    out << "    factorization: " << rec.factorization.to_string() << "\n";
    out << "    squarefree: " << (rec.squarefree ? "yes" : "no") << "\n";
    out << "    projective order: "
        << (rec.projective_order ? std::to_string(*rec.projective_order) : "undetermined") << "\n";
    out << "    multiplier: " << rec.similitude.to_string() << "\n";
    out << "    roots in F_" << cert.p << ": " << join_roots(rec.prime_field_roots) << "\n";
  }

  out << "\nchecks\n";
  for (const auto& c : cert.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name << "\n";
    out << "    witnesses: " << join_witnesses(c.witnesses) << "\n";
    out << "    justification: " << c.justification << "\n";
    for (const auto& [k, v] : c.data) out << "    " << k << ": " << v << "\n";
  }

  out << "\nhypotheses\n";
  for (const auto& h : cert.hypotheses) out << "  - " << h << "\n";

  out << "\nverdict: " << to_string(cert.verdict) << "\n";
  out << "conclusion: " << conclusion(cert) << "\n";
  return out.str();
}

nlohmann::json to_json(const Certificate& cert) {
  using nlohmann::json;
  json records = json::array();
  for (const auto& rec : cert.records) {
    json roots = json::array();
    for (const auto& r : rec.prime_field_roots) roots.push_back(r.to_string());
    records.push_back({
        {"q", rec.q},
        {"a_q", rec.a_q.to_string()},
        {"a_q2", rec.a_q2.to_string()},
        {"charpoly", rec.charpoly.to_string()},
        {"factorization", rec.factorization.to_string()},
        {"squarefree", rec.squarefree},
        {"projective_order", rec.projective_order ? json(*rec.projective_order) : json(nullptr)},
        {"multiplier", rec.similitude.to_string()},
        {"prime_field_roots", roots},
    });
  }
  json checks = json::array();
  for (const auto& c : cert.checks) {
    checks.push_back({
        {"name", c.name},
        {"status", to_string(c.status)},
        {"witnesses", c.witnesses},
        {"justification", c.justification},
        {"data", c.data},
    });
  }
  return {
      {"dataset",
       {{"weight", cert.weight},
        {"level", cert.level},
        {"defining_poly", cert.defining_poly},
        {"defining_poly_text", int_poly_to_string(cert.defining_poly)},
        {"digest", cert.defining_poly_digest}}},
      {"p", cert.p},
      {"root", cert.root},
      {"records", records},
      {"checks", checks},
      {"hypotheses", cert.hypotheses},
      {"verdict", to_string(cert.verdict)},
      {"conclusion", conclusion(cert)},
  };
}

std::string to_json_text(const std::vector<Certificate>& certs) {
  nlohmann::json doc;
  if (certs.size() == 1) {
    doc = to_json(certs.front());
  } else {
    doc = nlohmann::json::array();
    for (const auto& c : certs) doc.push_back(to_json(c));
  }
  return doc.dump(2) + "\n";
}

}  // namespace galcert
