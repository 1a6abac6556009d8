#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galcert/cli.hpp"
#include "galcert/dataset_io.hpp"
#include "galcert/report.hpp"

using namespace galcert;
namespace fs = std::filesystem;

namespace {

const std::string kData = GALCERT_DATA_DIR;
const std::string kGolden = GALCERT_GOLDEN_DIR;

std::string fixture(const std::string& name) { return kData + "/" + name + ".dataset"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(RunConfig config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config_for(const std::string& name, OutputFormat format = OutputFormat::kText) {
  RunConfig c;
  c.input = fixture(name);
  c.format = format;
  return c;
}

EigenformDataset parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

const char* kHeader = "weight 28\nlevel 1\ndefining_poly -59412960 -294086 -1 1\n";

}  // namespace

TEST_CASE("ingest fixture") {
  const EigenformDataset ds = ingest(fixture("weight28_level1"));
  CHECK(ds.weight == 28);
  CHECK(ds.level == 1);
  CHECK(ds.defining_poly == IntPoly{-59412960, -294086, -1, 1});
  CHECK(ds.assumptions.not_maass_spezialform);
  CHECK(ds.assumptions.conductor_one);
  CHECK(ds.eigenvalues.size() == 6);
  CHECK(ds.eigenvalues.at(25) == IntPoly{2});
}

TEST_CASE("dataset parse errors") {
  SUBCASE("missing a_{q^2} names the entry") {
    try {
      parse(std::string(kHeader) + "eigenvalue 2 4\neigenvalue 4 5\neigenvalue 3 3\n");
      FAIL("expected DatasetError");
    } catch (const DatasetError& e) {
      CHECK(e.field() == "eigenvalue 9");
      CHECK(std::string(e.what()).find('9') != std::string::npos);
    }
  }
  CHECK_THROWS_WITH_AS(parse(kHeader), doctest::Contains("no Frobenius data"), DatasetError);
  CHECK_THROWS_AS(parse("weight 28\nweight 28\n"), DatasetError);
  CHECK_THROWS_AS(parse(std::string(kHeader) + "colour blue\n"), DatasetError);
  CHECK_THROWS_AS(parse(std::string(kHeader) + "assumptions maybe\n"), DatasetError);
  CHECK_THROWS_AS(parse("weight x\n"), DatasetError);
  CHECK_THROWS_AS(parse("weight 99999999999999999999\n"), DatasetError);
  CHECK_THROWS_AS(parse("level 1\ndefining_poly 0 1\neigenvalue 2 1\neigenvalue 4 1\n"), DatasetError);
  CHECK_THROWS_AS(parse(std::string(kHeader) + "eigenvalue 2 1\neigenvalue 2 1\neigenvalue 4 1\n"), DatasetError);
  try {
    parse(std::string(kHeader) + "eigenvalue 2 1\n\n# comment\neigenvalue 2 3\n");
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(e.line() == 7);
  }
  CHECK_THROWS_AS(ingest(kData + "/does_not_exist.dataset"), DatasetError);

  SUBCASE("comments and blank lines") {
    const EigenformDataset ds =
        parse("# header\n\nweight 28 # k\nlevel 1\ndefining_poly -59412960 -294086 -1 1\n"
              "eigenvalue 2 4\neigenvalue 4 5   # a_4\n");
    CHECK(ds.eigenvalues.size() == 2);
    CHECK_FALSE(ds.assumptions.conductor_one);
  }
}

TEST_CASE("exceptional table files") {
  std::istringstream in("prime 7\n# maximal exceptional\ngroup PGL(2,7) 336\ngroup A_7.2 5040\n");
  const ExceptionalTable t = parse_exceptional_table(in);
  CHECK(t.p == 7);
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries[1].name == "A_7.2");
  std::istringstream bad("group PGL(2,7) 336\n");
  CHECK_THROWS_AS(parse_exceptional_table(bad), DatasetError);
  std::istringstream zero("prime 7\ngroup G 0\n");
  CHECK_THROWS_AS(parse_exceptional_table(zero), DatasetError);
}

TEST_CASE("run exit codes") {
  RunConfig certified = config_for("weight28_level1");
  certified.root = 1;
  const Outcome ok = run_cli(certified);
  CHECK(ok.code == kExitCertified);
  CHECK(ok.out.find("verdict: LARGE_IMAGE") != std::string::npos);
  CHECK(ok.err.empty());

  const Outcome inc = run_cli(config_for("weight28_level1_a3_zero"));
  CHECK(inc.code == kExitInconclusive);
  CHECK(inc.err.find("check primitivity found no witness") != std::string::npos);

  CHECK(run_cli(config_for("split_control")).code == kExitInconclusive);

  RunConfig bad_root = certified;
  bad_root.root = 2;
  const Outcome br = run_cli(bad_root);
  CHECK(br.code == kExitError);
  CHECK(br.out.empty());
  CHECK(br.err.rfind("error: ", 0) == 0);

  RunConfig out_of_range = certified;
  out_of_range.root = 7;
  CHECK(run_cli(out_of_range).code == kExitError);

  CHECK(run_cli(config_for("missing")).code == kExitError);

  RunConfig other_prime = config_for("weight28_level1");
  other_prime.p = 11;
  CHECK(run_cli(other_prime).code == kExitError);
  other_prime.p = 9;
  CHECK(run_cli(other_prime).code == kExitError);
}

TEST_CASE("q = p entries are ignored with a warning") {
  const fs::path path = fs::temp_directory_path() / "galcert_qp.dataset";
  {
    std::ofstream f(path);
    f << slurp(fixture("weight28_level1")) << "eigenvalue 7 1\neigenvalue 49 1\n";
  }
  RunConfig c;
  c.input = path.string();
  c.root = 1;
  const Outcome o = run_cli(c);
  CHECK(o.code == kExitCertified);
  CHECK(o.err.find("warning: ignoring eigenvalues at q = 7") != std::string::npos);
  CHECK(o.out.find("q = 7\n") == std::string::npos);
  fs::remove(path);
}

TEST_CASE("custom exceptional table") {
  const fs::path path = fs::temp_directory_path() / "galcert_table.txt";
  {
    std::ofstream f(path);
    // 400 is divisible by 25, 16 and 8, so no record excludes it
    f << "prime 7\ngroup big 400\n";
  }
  RunConfig c = config_for("weight28_level1");
  c.root = 1;
  c.exceptional_table = path.string();
  const Outcome o = run_cli(c);
  CHECK(o.code == kExitInconclusive);
  CHECK(o.err.find("check exceptional found no witness") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("all roots") {
  const Outcome o = run_cli(config_for("weight28_level1", OutputFormat::kJson));
  CHECK(o.code == kExitCertified);
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["root"] == 4);
  CHECK(j[1]["root"] == 3);
  CHECK(j[2]["root"] == 1);

  RunConfig single = config_for("weight28_level1", OutputFormat::kJson);
  single.root = 3;
  CHECK(nlohmann::json::parse(run_cli(single).out).is_object());

  const Outcome text = run_cli(config_for("weight28_level1"));
  CHECK(text.out.find("embedding: alpha -> 4") < text.out.find("embedding: alpha -> 3"));
  CHECK(text.out.find("embedding: alpha -> 3") < text.out.find("embedding: alpha -> 1"));
}

TEST_CASE("text and JSON carry the same facts") {
  for (const char* name : {"weight28_level1", "weight28_level1_a3_zero", "split_control"}) {
    CAPTURE(name);
    const EigenformDataset ds = ingest(fixture(name));
    for (std::uint64_t root : {4, 3, 1}) {
      const Certificate cert = certify(ds, 7, root);
      const std::string text = to_text(cert);
      const nlohmann::json j = to_json(cert);
      const auto has = [&](const std::string& s) { return text.find(s) != std::string::npos; };
      CHECK(has("verdict: " + j["verdict"].get<std::string>()));
      CHECK(has("digest: " + j["dataset"]["digest"].get<std::string>()));
      CHECK(has("embedding: alpha -> " + std::to_string(j["root"].get<int>())));
      for (const auto& check : j["checks"]) {
        CHECK(has("[" + check["status"].get<std::string>() + "] " + check["name"].get<std::string>()));
        for (const auto& [k, v] : check["data"].items()) CHECK(has(k + ": " + v.get<std::string>()));
        for (const auto& w : check["witnesses"]) CHECK(has(std::to_string(w.get<int>())));
        CHECK(has(check["justification"].get<std::string>()));
      }
      for (const auto& rec : j["records"]) {
        CHECK(has("q = " + std::to_string(rec["q"].get<int>())));
        CHECK(has("charpoly: " + rec["charpoly"].get<std::string>()));
        CHECK(has("factorization: " + rec["factorization"].get<std::string>()));
      }
      for (const auto& h : j["hypotheses"]) CHECK(has(h.get<std::string>()));
      CHECK(has(j["conclusion"].get<std::string>()));
    }
  }
}

TEST_CASE("deterministic output and golden files") {
  for (const char* name : {"weight28_level1", "weight28_level1_a3_zero", "split_control"}) {
    CAPTURE(name);
    const Outcome a = run_cli(config_for(name, OutputFormat::kJson));
    const Outcome b = run_cli(config_for(name, OutputFormat::kJson));
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(kGolden + "/" + name + ".json"));
  }

  const fs::path path = fs::temp_directory_path() / "galcert_out.json";
  RunConfig c = config_for("weight28_level1", OutputFormat::kJson);
  c.output = path.string();
  const Outcome o = run_cli(c);
  CHECK(o.code == kExitCertified);
  CHECK(o.out.empty());
  CHECK(slurp(path.string()) == slurp(kGolden + "/weight28_level1.json"));
  fs::remove(path);
}
