#include "galcert/cli.hpp"

#include <fstream>
#include <vector>

#include "galcert/certifier.hpp"
#include "galcert/dataset_io.hpp"
#include "galcert/number_theory.hpp"
#include "galcert/report.hpp"

namespace galcert {

namespace {

std::vector<std::uint64_t> requested_roots(const RunConfig& config, const EigenformDataset& ds) {
  if (config.root) {
    if (*config.root >= config.p) {
      throw std::invalid_argument("--root must lie in [0, " + std::to_string(config.p) + ")");
    }
    return {*config.root};
  }
  std::vector<std::uint64_t> roots;
  for (const auto& r : embedding_roots(residual_roots(ds.defining_poly, config.p))) roots.push_back(r.to_prime());
  if (roots.empty()) {
    throw DatasetError("defining_poly", "no prime-field embedding: no root mod " + std::to_string(config.p));
  }
  return roots;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Certificate> certs;
  try {
    if (!is_prime(config.p)) throw std::invalid_argument("--prime must be prime, got " + std::to_string(config.p));
    const EigenformDataset ds = ingest(config.input);
    const auto p = static_cast<std::int64_t>(config.p);
    if (ds.eigenvalues.contains(p) || ds.eigenvalues.contains(p * p)) {
      err << "warning: ignoring eigenvalues at q = " << config.p
          << "; Frobenius at p carries no characteristic polynomial\n";
    }
    const ExceptionalTable table = config.exceptional_table.empty()
                                       ? ExceptionalTable::builtin(config.p)
                                       : read_exceptional_table(config.exceptional_table);
    for (auto root : requested_roots(config, ds)) certs.push_back(certify(ds, config.p, root, table));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  std::string report;
  if (config.format == OutputFormat::kJson) {
    report = to_json_text(certs);
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) report += (i ? "\n" : "") + to_text(certs[i]);
  }
  if (config.output.empty()) {
    out << report;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    file << report;
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kExitError;
    }
  }

  for (const auto& c : certs) {
    if (c.verdict != Verdict::kLargeImage) {
      for (const auto& check : c.checks) {
        if (!check.passed()) err << "root " << c.root << ": check " << check.name << " found no witness\n";
      }
    }
  }
  for (const auto& c : certs) {
    if (c.verdict != Verdict::kLargeImage) return kExitInconclusive;
  }
  return kExitCertified;
}

}  // namespace galcert
