#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hyperring/workbench.hpp"
#include "oracles.hpp"

using namespace hyperring;
namespace fs = std::filesystem;

namespace {

  std::string slurp(fs::path const& p) {
    std::ifstream     in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void spit(fs::path const& p, std::string const& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
  }

  fs::path work_dir() {
    fs::path const dir = fs::path(HYPERRING_WORK_DIR) / "workbench";
    fs::create_directories(dir);
    return dir;
  }

  struct Run {
    int         code;
    std::string out;
  };

  Run cli(std::string const& args) {
    fs::path const    log = work_dir() / "cli.out";
    std::string const cmd = std::string("\"") + HYPERRING_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    int const         raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(log)};
  }

  std::string z6_text() {
    return serialize_structure(builtin_structure("Z6"));
  }

}  // namespace

TEST_CASE("Z6 serializes to the golden file") {
  CHECK(z6_text() == slurp(fs::path(HYPERRING_GOLDEN_DIR) / "z6.json"));
}

TEST_CASE("round trips on the corpus") {
  for (auto const& item : generate_corpus(default_corpus_spec())) {
    auto const& g    = *item.structure;
    auto const  text = serialize_structure(g);
    CAPTURE(g.name());
    auto const back = parse_structure(text);
    CHECK(back.tables().add_table == g.tables().add_table);
    CHECK(back.tables().mul_table == g.tables().mul_table);
    CHECK(back.name() == g.name());
    CHECK(back.provenance() == g.provenance());
    CHECK(serialize_structure(back) == text);
  }
}

TEST_CASE("product provenance survives serialization") {
  auto const p   = product(builtin_structure("Z2"), builtin_structure("Z3"));
  auto const doc = nlohmann::json::parse(serialize_structure(p));
  CHECK(doc.at("provenance") == "product(Z2,Z3)");
  CHECK(doc.at("size") == 6);
}

TEST_CASE("malformed structure files") {
  auto doc                = nlohmann::json::parse(z6_text());
  doc["fTable"][1][2]     = nlohmann::json::array();
  try {
    parse_structure(doc.dump());
    FAIL("expected an input error");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("empty hyperoperation value") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_structure("{\"name\": \"x\""), InputError);
  auto missing = nlohmann::json::parse(z6_text());
  missing.erase("gTable");
  CHECK_THROWS_AS(parse_structure(missing.dump()), InputError);
  auto bad             = nlohmann::json::parse(z6_text());
  bad["gTable"][2][2] = 5;
  CHECK_THROWS_AS(parse_structure(bad.dump()), AxiomError);
}

TEST_CASE("a zero other than 0 is moved to index 0") {
  // Z3 written with its elements listed as 1, 2, 0: zero is index 2.
  nlohmann::json doc = {{"name", "Z3r"}, {"m", 2}, {"n", 2}, {"size", 3}, {"zero", 2}, {"one", 0}};
  auto value = [](int i) {
    return (i + 1) % 3;
  };
  auto index = [](int v) {
    return (v + 2) % 3;
  };
  nlohmann::json f = nlohmann::json::array();
  nlohmann::json g = nlohmann::json::array();
  for (int a = 0; a < 3; ++a) {
    nlohmann::json fr = nlohmann::json::array();
    nlohmann::json gr = nlohmann::json::array();
    for (int b = 0; b < 3; ++b) {
      fr.push_back({index((value(a) + value(b)) % 3)});
      gr.push_back(index((value(a) * value(b)) % 3));
    }
    f.push_back(fr);
    g.push_back(gr);
  }
  doc["fTable"] = f;
  doc["gTable"] = g;
  std::vector<std::string> warnings;
  auto const               s = parse_structure(doc.dump(), &warnings);
  CHECK(warnings.size() == 1);
  CHECK(validate_structure(s.tables()).valid());
  oracle::Raw const raw(s);
  CHECK(raw.f({0, 0}) == 1);
  CHECK(raw.g({0, 1}) == 0);
  CHECK(enumerate_hyperideals(s).size() == 2);
}

TEST_CASE("expansion specs and files") {
  auto const g   = builtin_structure("Z6");
  auto const lat = enumerate_hyperideals(g);
  CHECK(parse_expansion_spec("residual:0,3", g, lat).zero_image() == ElementSet::of({0, 2, 4}));
  CHECK(parse_expansion_spec("deltaG", g, lat).label() == "deltaG");
  CHECK_THROWS_AS(parse_expansion_spec("residual:0,1", g, lat), Error);
  CHECK_THROWS_AS(parse_expansion_spec("bogus", g, lat), InputError);

  std::string const text = R"({"label": "mine", "table": [
    {"ideal": [0], "image": [0,3]}, {"ideal": [0,3], "image": [0,3]},
    {"ideal": [0,2,4], "image": [0,1,2,3,4,5]}, {"ideal": [0,1,2,3,4,5], "image": [0,1,2,3,4,5]}]})";
  auto const        e    = parse_expansion_file(text, lat);
  CHECK(e.label() == "mine");
  CHECK(e.zero_image() == ElementSet::of({0, 3}));
  auto const path = work_dir() / "mine.json";
  spit(path, text);
  CHECK(parse_expansion_spec("@" + path.string(), g, lat).same_table(e));
}

TEST_CASE("corpus generation") {
  CorpusSpec spec;
  spec.seeds      = {"Z2", "Z3"};
  spec.operations = {"product"};
  spec.max_size   = 6;
  auto const items = generate_corpus(spec);
  bool       six   = false;
  for (auto const& item : items) {
    if (item.structure->size() == 6) {
      six = true;
      CHECK(item.factors.has_value());
    }
  }
  CHECK(six);

  spec.seeds      = {"Z6"};
  spec.operations = {"quotient"};
  std::vector<std::size_t> sizes;
  for (auto const& item : generate_corpus(spec)) {
    sizes.push_back(item.structure->size());
  }
  CHECK(std::find(sizes.begin(), sizes.end(), 3) != sizes.end());
  CHECK(std::find(sizes.begin(), sizes.end(), 2) != sizes.end());

  spec.seeds.clear();
  CHECK(generate_corpus(spec).empty());

  auto const parsed = parse_corpus_spec(R"({"seeds": ["Z2"], "maxSize": 4, "operations": ["product"]})");
  CHECK(parsed.seeds == std::vector<std::string>{"Z2"});
  CHECK(parsed.max_size == 4);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"seeds": ["Z2"], "maxSize": 40})"), InputError);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"seeds": ["Z2"], "operations": ["tensor"]})"), InputError);
}

TEST_CASE("default corpus is deterministic and valid") {
  std::vector<std::string> w1;
  std::vector<std::string> w2;
  auto const               a = generate_corpus(default_corpus_spec(), &w1);
  auto const               b = generate_corpus(default_corpus_spec(), &w2);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() >= 25);
  CHECK(w1 == w2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(serialize_structure(*a[i].structure) == serialize_structure(*b[i].structure));
    CHECK(validate_structure(a[i].structure->tables()).valid());
  }
}

TEST_CASE("command line exit codes") {
  auto const dir = work_dir();
  spit(dir / "z6.json", z6_text());

  auto r = cli("validate \"" + (dir / "z6.json").string() + "\"");
  CHECK(r.code == 0);

  auto broken           = nlohmann::json::parse(z6_text());
  broken["gTable"][2][2] = 5;
  spit(dir / "broken.json", broken.dump());
  r = cli("validate \"" + (dir / "broken.json").string() + "\"");
  CHECK(r.code == 1);
  CHECK(r.out.find("mul_associative") != std::string::npos);

  spit(dir / "garbage.json", "{not json");
  CHECK(cli("validate \"" + (dir / "garbage.json").string() + "\"").code == 2);
  CHECK(cli("validate").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("classify Z6 -e nosuch").code == 2);

  r = cli("classify \"" + (dir / "z6.json").string() + "\" -e residual:0,3 --json");
  REQUIRE(r.code == 0);
  auto const doc = nlohmann::json::parse(r.out);
  bool       seen = false;
  for (auto const& rec : doc.at("records")) {
    if (rec.at("ideal") == nlohmann::json{0, 2, 4}) {
      seen = true;
      CHECK(rec.at("flags").at("deltaZero") == true);
      CHECK(rec.at("flags").at("N") == false);
    }
  }
  CHECK(seen);

  CHECK(cli("theorems Z6 --only T7,T8").code == 0);
  CHECK(cli("theorems Z8 --only T20").code == 1);
  CHECK(cli("theorems Z6 --only T99").code == 2);

  auto const out = dir / "q.json";
  CHECK(cli("construct quotient Z6 --ideal 0,3 -o \"" + out.string() + "\"").code == 0);
  CHECK(parse_structure(slurp(out)).size() == 3);
  CHECK(cli("construct quotient Z6 --ideal 0,1").code != 0);
}
