#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace galcert {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string input;
  std::uint64_t p = 7;
  /// Embedding root alpha -> root; nullopt certifies every F_p embedding.
  std::optional<std::uint64_t> root;
  OutputFormat format = OutputFormat::kText;
  /// Empty writes to `out`.
  std::string output;
  /// Empty uses the built-in table for p.
  std::string exceptional_table;
};

inline constexpr int kExitCertified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Ingests, certifies each requested embedding and writes the report(s).
/// Returns 0 when every certificate is LARGE_IMAGE, 2 when any is
/// INCONCLUSIVE, 1 on usage or data errors (diagnostics go to `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace galcert
