#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hkc/commands.hpp"
#include "hkc/parser.hpp"
#include "hkc/report.hpp"

using namespace hkc;
using nlohmann::json;

namespace {

InputSpec json_spec(std::vector<std::string> inputs) {
  InputSpec spec;
  spec.parametrizations = std::move(inputs);
  spec.output_mode = OutputMode::kJson;
  return spec;
}

json run_json(const std::string& command, const std::string& input, std::vector<std::string> args = {}) {
  const CommandResult r = run_command(command, args, json_spec({input}));
  REQUIRE_MESSAGE(r.exit_code == kExitOk, r.error);
  return json::parse(r.output);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("analyze report schema") {
  const json j = run_json("analyze", "t^6, t^9+t^10, 2*t^19+t^20+t^41");
  for (const char* key : {"generators", "multiplicity", "value_semigroup", "hk_sequence", "hk_generators",
                          "embedding_dimension", "conductor_degree", "conductor_in_m2", "reduced_type",
                          "torsion_witness", "extension", "precision_used"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["hk_sequence"] == json({6, 9, 41}));
  CHECK(j["conductor_degree"] == 36);
  CHECK(j["conductor_in_m2"] == false);
  CHECK(j["value_semigroup"]["min_generators"] == json({6, 9, 19, 41}));
  CHECK(j["value_semigroup"]["genus"] == 20);
  CHECK(j["generators"][2] == "2*t^19 + t^20 + t^41");
  CHECK(j["hk_generators"][2] == "t^41");
  CHECK(j["extension"].is_null());
  CHECK(j["torsion_witness"]["image_in_normalization"] == "0");
}

TEST_CASE("display truncation of hk generators") {
  const json j = run_json("analyze", "t^4, t^6+t^7+t^30");
  CHECK(j["hk_generators_display_precision"] == 20);
  CHECK(j["hk_generators"][1] == "t^6 + t^7");
  CHECK(j["torsion_witness"].is_null());
  CHECK(j["extension"]["conductor"] == 12);
}

TEST_CASE("json output is deterministic") {
  const auto spec = json_spec({"t^5, t^7, t^12+t^23"});
  CHECK(run_command("analyze", {}, spec).output == run_command("analyze", {}, spec).output);
}

TEST_CASE("member") {
  CHECK(run_json("member", "t^5,t^7,t^12", {"t^23"})["member"] == false);
  CHECK(run_json("member", "t^5,t^7,t^12+t^23", {"t^23"})["member"] == true);
}

TEST_CASE("truncate") {
  const json j = run_json("truncate", "t^5, t^7, t^12+t^23");
  CHECK(j["d"] == 24);
  CHECK(j["rings_equal"] == true);
  CHECK(j["generators"] == json({"t^5", "t^7", "t^12 + t^23"}));
}

TEST_CASE("equal with a file or inline generators") {
  const std::string path = temp_file("hkc_equal.txt", "\n# other\nt^5, t^7+t^19, t^12+t^23\n");
  CHECK(run_json("equal", "t^5, t^7, t^12+t^23", {path})["equal"] == true);
  CHECK(run_json("equal", "t^5, t^7, t^12+t^23", {"t^5, t^7"})["equal"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("other commands") {
  CHECK(run_json("semigroup", "t^3, t^5")["conductor"] == 8);
  CHECK(run_json("hk", "t^6, t^9+t^10, 2*t^19+t^20+t^41")["hk_generators"][2]["z"] == "x2^2 - x1^3");
  CHECK(run_json("hk", "t^2, t^3, t^4")["embedding_dimension"] == 2);
  CHECK(run_json("normalize", "t^4 + t^5, t^6")["generators"][0] == "t^4");
  CHECK(run_json("extend", "t^4, t^6+t^7")["hk_sequence"] == json({4, 6, 15}));
  CHECK(run_json("torsion", "t^3,t^4,t^5")["omega"] == "5*x3*dx1 - 3*x1*dx3");
  CHECK(run_json("torsion", "t^4, t^6+t^7").is_null());
}

TEST_CASE("exit codes") {
  InputSpec spec;
  spec.parametrizations = {"t^4, t^6"};
  CHECK(run_command("analyze", {}, spec).exit_code == kExitMath);
  spec.parametrizations = {"t^4, t^6 + O(t^9)"};
  CHECK(run_command("analyze", {}, spec).exit_code == kExitMath);
  spec.parametrizations = {"t^4, t^6 +"};
  const auto parse = run_command("analyze", {}, spec);
  CHECK(parse.exit_code == kExitUsage);
  CHECK(parse.error.find("position") != std::string::npos);
  spec.parametrizations = {"t^4, 1 + t"};
  CHECK(run_command("analyze", {}, spec).exit_code == kExitMath);
  spec.parametrizations = {"t^3, t^4"};
  CHECK(run_command("frobnicate", {}, spec).exit_code == kExitUsage);
  CHECK(run_command("member", {}, spec).exit_code == kExitUsage);
  CHECK(run_command("analyze", {"x"}, spec).exit_code == kExitUsage);
  CHECK(run_command("extend", {}, spec).exit_code == kExitOk);
  spec.parametrizations = {"t^3, t^4, t^5"};
  CHECK(run_command("extend", {}, spec).exit_code == kExitMath);
  spec.parametrizations.clear();
  CHECK(run_command("analyze", {}, spec).exit_code == kExitUsage);
}

TEST_CASE("batch input keeps order") {
  const std::string path = temp_file("hkc_batch.txt", "t^3, t^4\n\nt^5, t^7, t^12+t^23\nt^2, t^3\n");
  const auto inputs = read_parametrizations(path);
  REQUIRE(inputs.size() == 3);
  const CommandResult r = run_command("semigroup", {}, json_spec(inputs));
  CHECK(r.exit_code == kExitOk);
  const json j = json::parse(r.output);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["conductor"] == 6);
  CHECK(j[1]["conductor"] == 19);
  CHECK(j[2]["conductor"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("text mode") {
  InputSpec spec;
  spec.parametrizations = {"t^6, t^9+t^10, 2*t^19+t^20+t^41"};
  const auto r = run_command("analyze", {}, spec);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output.find("HK sequence:         6, 9, 41") != std::string::npos);
  CHECK(r.output.find("conductor not contained in m^2") != std::string::npos);
}

TEST_CASE("display helper") {
  CHECK(display_series(parse_series("t^6 + t^25"), 20) == "t^6 + O(t^20)");
  CHECK(display_series(parse_series("t^6 + t^19"), 20) == "t^6 + t^19");
}
