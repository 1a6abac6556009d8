#include "galcert/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace galcert {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, const std::string& field, int line) {
  std::int64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw DatasetError(field, "integer out of 64-bit range: " + tok, line);
  if (ec != std::errc() || ptr != last || first == last) throw DatasetError(field, "not an integer: " + tok, line);
  return value;
}

void require_arity(const std::vector<std::string>& toks, std::size_t n, int line) {
  if (toks.size() != n) {
    throw DatasetError(toks[0], "expected " + std::to_string(n - 1) + " value(s)", line);
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("", "cannot open " + path);
  return in;
}

}  // namespace

EigenformDataset parse_dataset(std::istream& in) {
  EigenformDataset ds;
  std::set<std::string> seen;
  std::map<std::int64_t, int> eigen_lines;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& k = toks[0];
    if (k != "eigenvalue" && !seen.insert(k).second) throw DatasetError(k, "duplicate key", lineno);
    if (k == "weight") {
      require_arity(toks, 2, lineno);
      ds.weight = static_cast<int>(parse_int(toks[1], k, lineno));
    } else if (k == "level") {
      require_arity(toks, 2, lineno);
      ds.level = static_cast<int>(parse_int(toks[1], k, lineno));
    } else if (k == "defining_poly") {
      if (toks.size() < 2) throw DatasetError(k, "missing coefficients", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) ds.defining_poly.push_back(parse_int(toks[i], k, lineno));
    } else if (k == "assumptions") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "not_maass_spezialform") {
          ds.assumptions.not_maass_spezialform = true;
        } else if (toks[i] == "conductor_one") {
          ds.assumptions.conductor_one = true;
        } else {
          throw DatasetError(k, "unknown assumption flag: " + toks[i], lineno);
        }
      }
    } else if (k == "eigenvalue") {
      if (toks.size() < 3) throw DatasetError(k, "expected an index and at least one coefficient", lineno);
      const std::int64_t index = parse_int(toks[1], k, lineno);
      const std::string field = "eigenvalue " + std::to_string(index);
      IntPoly expr;
      for (std::size_t i = 2; i < toks.size(); ++i) expr.push_back(parse_int(toks[i], field, lineno));
      if (!ds.eigenvalues.emplace(index, std::move(expr)).second) {
        throw DatasetError(field, "duplicate entry", lineno);
      }
      eigen_lines[index] = lineno;
    } else {
      throw DatasetError(k, "unknown key", lineno);
    }
  }
  if (!seen.contains("weight")) throw DatasetError("weight", "missing");
  if (!seen.contains("defining_poly")) throw DatasetError("defining_poly", "missing");
  try {
    ds.validate();
  } catch (const DatasetError& e) {
    // Point at the offending line when the entry exists in the file.
    const std::string prefix = "eigenvalue ";
    if (e.field().rfind(prefix, 0) == 0) {
      const std::int64_t index = std::stoll(e.field().substr(prefix.size()));
      if (auto it = eigen_lines.find(index); it != eigen_lines.end()) {
        const std::string what = e.what();
        throw DatasetError(e.field(), what.substr(e.field().size() + 2), it->second);
      }
    }
    throw;
  }
  return ds;
}

EigenformDataset ingest(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_dataset(in);
}

ExceptionalTable parse_exceptional_table(std::istream& in) {
  ExceptionalTable table;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "prime") {
      require_arity(toks, 2, lineno);
      table.p = static_cast<std::uint64_t>(parse_int(toks[1], "prime", lineno));
    } else if (toks[0] == "group") {
      require_arity(toks, 3, lineno);
      const std::int64_t order = parse_int(toks[2], "group", lineno);
      if (order <= 0) throw DatasetError("group", "order must be positive", lineno);
      table.entries.push_back({toks[1], static_cast<std::uint64_t>(order)});
    } else {
      throw DatasetError(toks[0], "unknown key", lineno);
    }
  }
  if (table.p == 0) throw DatasetError("prime", "missing");
  return table;
}

ExceptionalTable read_exceptional_table(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_exceptional_table(in);
}

}  // namespace galcert
