#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "finring/cli.hpp"
#include "finring/ring_spec.hpp"
#include "json.hpp"

using finring::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  if (const char* d = std::getenv("RING_CLI_TEST_DIR")) return d;
  return std::filesystem::temp_directory_path();
}

}  // namespace

TEST_CASE("info") {
  const auto r = run({"info", "--ring", "zmod:6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 6\n") != std::string::npos);
  CHECK(r.out.find("units (2): {1, 5}\n") != std::string::npos);
  CHECK(r.out.find("idempotents (4): {0, 1, 3, 4}\n") != std::string::npos);
  CHECK(r.out.find("J (1): {0}\n") != std::string::npos);
  CHECK(r.out.find("qnil (1): {0}\n") != std::string::npos);

  const auto j = run({"info", "--ring", "tri:2:zmod:2", "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["order"] == 8);
}

TEST_CASE("classify and inverse") {
  const auto c = run({"classify", "--ring", "zmod:4", "--element", "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("nilpotent: yes\n") != std::string::npos);
  CHECK(c.out.find("group_invertible: no\n") != std::string::npos);

  const auto i = run({"inverse", "--ring", "zmod:4", "--element", "2", "--variant", "drazin"});
  CHECK(i.code == 0);
  CHECK(i.out == "inverse: 0\nindex: 2\nspectral_idempotent: 1\n");

  const auto g = run({"inverse", "--ring", "zmod:4", "--element", "2", "--variant", "group"});
  CHECK(g.code == 0);
  CHECK(g.out.find("none") != std::string::npos);
}

TEST_CASE("transfer") {
  const auto t = run({"transfer", "--ring", "zmod:6", "--formula", "pseudo-one-minus", "--a", "2",
                      "--b", "2", "--json"});
  REQUIRE(t.code == 0);
  const auto doc = nlohmann::json::parse(t.out);
  CHECK(doc["outputs"]["beta_pD"] == "3");
  CHECK(doc["outputs"]["f"] == "4");
  CHECK(doc["index"] == 1);

  const auto c = run({"transfer", "--ring", "zmod:6", "--formula", "clean", "--a", "2", "--b",
                      "1", "--e", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("f=4 g=3 v=5") != std::string::npos);

  // An idempotent that yields no decomposition is an answer, not an error.
  const auto n = run({"transfer", "--ring", "zmod:6", "--formula", "clean", "--a", "2", "--b",
                      "1", "--e", "0"});
  CHECK(n.code == 0);
  CHECK(n.out.find("none") != std::string::npos);

  const auto m = run({"transfer", "--ring", "mat:2:zmod:2", "--formula", "cline", "--a",
                      "[[0,1],[0,0]]", "--b", "[[0,0],[1,0]]", "--variant", "drazin"});
  CHECK(m.code == 0);
  CHECK(m.out.find("[[0,0],[0,1]]") != std::string::npos);
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--theorem", "CLINE_D", "--ring", "zmod:8"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS CLINE_D zmod:8 total=64 checked=64 not_applicable=0 failures=0", 0) == 0);

  const auto all1 = run({"verify", "--theorem", "all", "--ring", "registry", "--json", "-"});
  const auto all2 = run({"verify", "--theorem", "all", "--ring", "registry", "--json", "-"});
  REQUIRE(all1.code == 0);
  CHECK(all1.out == all2.out);
  const auto doc = nlohmann::json::parse(all1.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["reports"].size() == 17 * finring::default_registry().size());

  const auto sampled = run({"verify", "--theorem", "CLINE_PD", "--ring", "tri:2:zmod:3",
                            "--sample", "20", "--seed", "3", "--json", "-"});
  CHECK(sampled.code == 0);
  CHECK(nlohmann::json::parse(sampled.out)["reports"][0]["seed"] == 3);

  CHECK(run({"verify", "--theorem", "NOPE", "--ring", "zmod:4"}).code == 2);
  CHECK(run({"verify", "--theorem", "CORNER_CLEAN", "--ring", "zmod:65"}).code == 2);
  CHECK(run({"verify", "--theorem", "CORNER_CLEAN", "--ring", "zmod:65", "--force"}).code == 0);
}

TEST_CASE("search") {
  const auto s = run({"search", "--theorem", "CLINE_D", "--ring", "zmod:4", "--budget", "0"});
  CHECK(s.code == 0);
  CHECK(s.out.find("0 cases") != std::string::npos);
  const auto t = run({"search", "--theorem", "CLINE_D", "--ring", "zmod:2", "--ring", "zmod:3"});
  CHECK(t.code == 0);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"info", "--ring", "zmod:"}).code == 2);
  CHECK(run({"info", "--ring", "ring:5"}).code == 2);
  CHECK(run({"inverse", "--ring", "zmod:4", "--element", "9", "--variant", "group"}).code == 2);
  CHECK(run({"inverse", "--ring", "zmod:4", "--element", "2", "--variant", "moore"}).code == 2);
  CHECK_FALSE(run({"info", "--ring", "zmod:"}).err.empty());
}

TEST_CASE("order cap") {
  CHECK(run({"--order-cap", "10", "info", "--ring", "zmod:11"}).code == 2);
  CHECK(run({"--order-cap", "11", "info", "--ring", "zmod:11"}).code == 0);
  setenv("RING_ORDER_CAP", "8", 1);
  CHECK(finring::cli::default_config().order_cap == 8);
  CHECK(run({"info", "--ring", "zmod:9"}).code == 2);
  CHECK(run({"info", "--ring", "zmod:8"}).code == 0);
  unsetenv("RING_ORDER_CAP");
  CHECK(run({"info", "--ring", "zmod:9"}).code == 0);
}

TEST_CASE("printed elements parse back") {
  for (const char* spec : {"mat:2:zmod:2", "prod:zmod:2,zmod:4", "tri:2:zmod:3"}) {
    const auto r = run({"info", "--ring", spec, "--json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& u : doc["units"]) {
      const auto c = run({"classify", "--ring", spec, "--element", u["element"].get<std::string>()});
      CHECK(c.code == 0);
      CHECK(c.out.find("unit: yes") != std::string::npos);
    }
  }
}

TEST_CASE("validate and table rings") {
  const auto dir = scratch_dir();
  const auto good = dir / "cli_good_table.json";
  const auto bad = dir / "cli_bad_table.json";
  {
    std::ofstream f(good);
    f << R"({"order":2,"add":[0,1,1,0],"mul":[0,0,0,1],"one":1})";
  }
  {
    // x*y = 1 - x: no multiplicative identity.
    std::ofstream f(bad);
    f << R"({"order":2,"add":[0,1,1,0],"mul":[1,1,0,0],"one":1})";
  }
  CHECK(run({"validate", "--ring", "table:" + good.string()}).code == 0);
  CHECK(run({"validate", "--ring", "table:" + bad.string()}).code == 1);
  CHECK(run({"info", "--ring", "table:" + bad.string()}).code == 2);
  CHECK(run({"info", "--ring", "table:" + (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("registry file") {
  const auto path = scratch_dir() / "cli_registry.txt";
  {
    std::ofstream f(path);
    f << "# small\nzmod:2\n\nzmod:3\n";
  }
  const auto r = run({"--registry-file", path.string(), "verify", "--theorem", "UNIQUENESS",
                      "--ring", "registry"});
  CHECK(r.code == 0);
  CHECK(r.out.find("zmod:2") != std::string::npos);
  CHECK(r.out.find("zmod:3") != std::string::npos);
  CHECK(r.out.find("zmod:12") == std::string::npos);
}
