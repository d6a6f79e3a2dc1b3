#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ietilt/error.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ietilt;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ietilt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(cli::default_data_dir()) / name).string(); }

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ietilt_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("algebra files") {
    const auto a = parse_algebra_file(data("nakayama_a3.json"));
    CHECK(a->dimension() == 5);
    CHECK(parse_algebra_file(data("hereditary_a2.json"))->dimension() == 3);
    CHECK(with_field(a, 5)->field().p() == 5);
    CHECK(with_field(a, 2) == a);
  }

  TEST_CASE("parse errors name the fault") {
    auto message = [](const std::string& text) {
      try {
        parse_algebra_json(text, "x.json");
      } catch (const ParseError& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message("{\"vertices\": [\"1\"],\n \"arrows\": [}").find("line 2") != std::string::npos);
    CHECK(message("{\"arrows\": []}").find("vertices") != std::string::npos);
    CHECK(message(R"({"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": 1, "to": "2"}]})")
              .find("arrows[1].from") != std::string::npos);
    CHECK(message(R"({"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "9"}]})").find("x.json") != std::string::npos);
    CHECK(message(R"({"vertices": ["1"], "arrows": [], "field": {"p": 4}})") != "no error");
    CHECK_THROWS_AS(parse_algebra_file("/nonexistent/file.json"), ParseError);
  }

  TEST_CASE("module expressions") {
    const auto cat = interval_catalog(fixtures::nakayama_a3());
    CHECK(parse_module_expr("S1+S3+P1", cat) == fixtures::multi(cat, {"S1", "S3", "P1"}));
    CHECK(parse_module_expr(" P1 + S1 + S1 ", cat) == fixtures::multi(cat, {"S1", "S1", "P1"}));
    CHECK(parse_module_expr("0", cat).empty());
    CHECK_THROWS_AS(parse_module_expr("S1+Q", cat), InvalidInput);
    CHECK_THROWS_AS(parse_module_expr("S1++S2", cat), InvalidInput);
  }

  TEST_CASE("rendering") {
    const auto cat = interval_catalog(fixtures::nakayama_a3());
    CHECK(render(cat, fixtures::multi(cat, {"P1", "S3", "S1"})) == "S1+S3+P1");
    CHECK(render(cat, Multiset{}) == "0");
    CHECK(render(cat, cat.projectives(), LabelStyle{true}) == "Λ");
    CHECK(render(cat, cat.injectives(), LabelStyle{true}) == "DΛ");
    CHECK(render(cat, fixtures::set(cat, {"S1", "S3"}), LabelStyle{true}) == "S1S3");
    CHECK(render_subcat(cat, fixtures::set(cat, {"P1", "S1"})) == "add{S1,P1}");
    CHECK(render_subcat(cat, IndexSet{}) == "0");
    CHECK(render_subcat(cat, cat.all()) == "mod");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--format", "xml", "ie"}).code == 2);
    CHECK(invoke({"--p", "4", "ie"}).code == 2);
    CHECK(invoke({"--algebra", "/nonexistent.json", "ie"}).code == 2);
    CHECK(invoke({"canonicalize", "--m", "S1+Q", "--n", "S1"}).code == 2);
    CHECK(invoke({"canonicalize", "--m", "S1+S2", "--n", "S1+S2"}).code == 2);
    CHECK(invoke({"canonicalize", "--m", "S1"}).code == 2);
    CHECK(invoke({"classify", "--bound", "0"}).code == 2);
    const auto bad = invoke({"--algebra", "/nonexistent.json", "ie"});
    CHECK(bad.err.find("error:") != std::string::npos);
  }

  TEST_CASE("census commands") {
    const auto stt = invoke({"--format", "json", "stt"});
    REQUIRE(stt.code == 0);
    const auto twins = invoke({"--format", "json", "twins"});
    REQUIRE(twins.code == 0);
    CHECK(nlohmann::json::parse(twins.out)["records"].size() == 22);
    const auto canonical = invoke({"--format", "json", "twins", "--canonical-only"});
    const auto ie = invoke({"--format", "json", "ie"});
    REQUIRE(ie.code == 0);
    const auto ie_doc = nlohmann::json::parse(ie.out);
    CHECK(ie_doc["records"].size() == 21);
    CHECK(nlohmann::json::parse(canonical.out)["records"].size() == ie_doc["records"].size());
    CHECK(nlohmann::json::parse(ie_doc.dump(2)).dump(2) + "\n" == ie.out);
    CHECK(invoke({"--format", "csv", "ext-pairs"}).code == 0);
    CHECK(invoke({"catalog"}).out.find("P1") != std::string::npos);
    CHECK(invoke({"--algebra", data("hereditary_a2.json"), "--format", "json", "ie"}).code == 0);
  }

  TEST_CASE("canonicalize command") {
    const auto r = invoke({"canonicalize", "--m", "S1+S3+P1", "--n", "S1+S3+P2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0 -> S2 -> S1+S3+P1 -> S1+S1+S3 -> 0") != std::string::npos);
    CHECK(r.out.find("0 -> S1+S3+S3 -> S1+S3+P2 -> S2 -> 0") != std::string::npos);
  }

  TEST_CASE("classify command") {
    const auto r = invoke({"--format", "json", "classify"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["records"].size() == 21);
    for (const auto& rec : doc["records"]) {
      CHECK(rec["flags"].contains("is_ice"));
      CHECK(rec["flags"].contains("is_ike"));
    }
  }

  TEST_CASE("verify-paper") {
    const auto r = invoke({"verify-paper"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(invoke({"--p", "3", "verify-paper"}).code == 0);
    for (const auto& c : cli::verify_paper(cli::default_data_dir(), data("golden"), Scalar{5})) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
  }

  TEST_CASE("verify-paper reports a perturbed row") {
    const auto dir = scratch_dir("golden");
    auto doc = nlohmann::json::parse(read_text_file(data("golden/hereditary_a2.json")));
    doc["ie"][0]["ext_pair"]["I"] = {"S1"};
    std::ofstream(dir / "hereditary_a2.json") << doc.dump(2);
    const auto r = invoke({"verify-paper", "--golden-dir", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("add{P2}") != std::string::npos);

    const auto empty = scratch_dir("empty");
    CHECK(invoke({"verify-paper", "--golden-dir", empty.string()}).code == 1);
  }

  TEST_CASE("user catalog") {
    const auto dir = scratch_dir("catalog");
    const auto cat = interval_catalog(parse_algebra_file(data("nakayama_a3.json")));
    std::ofstream(dir / "cat.json") << catalog_to_json(cat);
    const auto r = invoke({"--catalog", (dir / "cat.json").string(), "--format", "json", "ie"});
    CHECK(r.code == 0);
    CHECK(r.out == invoke({"--format", "json", "ie"}).out);
  }
}
