#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "kacwreath/cli.hpp"

using namespace kw;
using nlohmann::json;

namespace {

const std::string kZ2Half = R"({"group":"cyclic:2","n":3,"k":{"rational":"1/2"},"lambda":[["1","0"],["0","0"]]})";
const std::string kZ2Irr4 = R"({"group":"cyclic:2","n":4,"k":"irrational","lambda":[["1","0"],["0","0"]]})";
const std::string kTrivHalf = R"({"group":"trivial","n":3,"k":{"rational":"-1/2"},"lambda":[["1","0"]]})";

json ok_json(const std::vector<std::string>& args) {
  const CliResult r = run_cli(args);
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("Face parsing") {
  const ParameterFace p = parse_face_text(kZ2Half);
  CHECK(p.n == 3);
  CHECK(p.kclass == KClass::Rational);
  CHECK(p.k == make_rational(1, 2));
  CHECK(face_to_json(p) == json::parse(kZ2Half));
  CHECK(face_to_json(parse_face_text(kZ2Irr4))["k"] == "irrational");
  CHECK_THROWS_AS(parse_face_text("{"), InputError);
  try {
    parse_face_text(R"({"group":"cyclic:2","n":3,"k":"irrational","lambda":[["1","0"],["0","0"]],"c":1})");
    FAIL("unknown key accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("\"c\"") != std::string::npos);
  }
  try {
    parse_face_text(R"({"group":"cyclic:2","n":3,"k":"irrational","lambda":[["1","0"],["0.5","0"]]})");
    FAIL("decimal accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("lambda[1][0]") != std::string::npos);
  }
}

TEST_CASE("hyperplanes") {
  const json j = ok_json({"hyperplanes", "--inline", kZ2Half});
  bool has_e = false;
  bool any_witness = false;
  for (const auto& h : j["hyperplanes"]) {
    if (h["kind"] == "E" && h["m"] == "2" && h["N"] == "-1") has_e = true;
    if (h["kind"] == "H" && h["aspherical"] == true) any_witness = true;
  }
  CHECK(has_e);
  if (j["aspherical"] == true) CHECK(any_witness);

  const json s =
      ok_json({"hyperplanes", "--inline", R"({"group":"trivial","n":5,"k":"irrational","lambda":[["1","0"]]})"});
  CHECK(s["hyperplanes"].empty());
  CHECK(s["verdict"] == "simple (predicted)");

  const CliResult bad = run_cli(
      {"hyperplanes", "--inline", R"({"group":"cyclic:2","n":3,"k":"irrational","lambda":[["1","0"],["1","0"]]})"});
  CHECK(bad.exit_code == kExitInput);
  CHECK(bad.err.find("(λ,δ)=1") != std::string::npos);
  CHECK(bad.err.find("lambda") != std::string::npos);
}

TEST_CASE("predict") {
  const json a = ok_json({"predict", "--inline", kZ2Irr4});
  CHECK(a["findim"] == "1");
  bool dio = false;
  for (const auto& c : a["crosschecks"])
    if (c["name"] == "diophantine") {
      dio = true;
      CHECK(c["value"] == "1");
      CHECK(c["agree"] == "yes");
    }
  CHECK(dio);

  const json b = ok_json({"predict", "--inline", kTrivHalf});
  json expect = json::array({json{{"dim", "1"}, {"i", "1"}, {"j", "1"}}, json{{"dim", "2"}, {"i", "3"}, {"j", "0"}}});
  CHECK(b["gr2"] == expect);
  CHECK(b["findim"] == "0");

  const json c = ok_json(
      {"predict", "--inline", R"({"group":"cyclic:2","n":2,"k":{"rational":"0"},"lambda":[["1","0"],["0","0"]]})"});
  CHECK(c["gr"] == json{{"0", "2"}, {"1", "1"}, {"2", "2"}});
  CHECK(c["crosschecks"][0]["name"] == "closed_form");
  CHECK(c["crosschecks"][0]["agree"] == "yes");

  const CliResult w = run_cli({"predict", "--inline", kZ2Irr4, "--depth", "2"});
  CHECK(w.exit_code == kExitWindow);
}

TEST_CASE("gram, snf, dump-dynkin") {
  const json g = ok_json({"gram", "--ell", "3"});
  CHECK(g["C_inverse"] == json::parse(R"([["2","-1","0"],["-1","2","-1"],["0","-1","1"]])"));
  CHECK(g["positive_definite"] == true);
  CHECK(g["nondegenerate_off_roots_of_unity"] == true);
  const CliResult unsupported = run_cli({"gram", "--group", "binary_dihedral:2"});
  CHECK(unsupported.exit_code == kExitUnsupported);
  CHECK(unsupported.err.find("binary_dihedral:2") != std::string::npos);

  const json s = ok_json({"snf", "--ell", "3"});
  CHECK(s["F"]["group"] == "Z+Z3");
  CHECK(s["boldF"]["group"] == "Z");
  CHECK(s["center"] == json::array({"3"}));

  const json d = ok_json({"dump-dynkin", "--group", "binary_icosahedral"});
  CHECK(d["type"] == "E8^(1)");
  CHECK(d["marks"] == json::parse(R"(["1","2","3","4","5","6","4","2","3"])"));
}

TEST_CASE("Formats, errors and cache") {
  const CliResult t = run_cli({"snf", "--ell", "3", "--format", "tsv"});
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("F.group\tZ+Z3\n") != std::string::npos);

  CHECK(run_cli({"frobnicate", "--ell", "3"}).exit_code == kExitInput);
  CHECK(run_cli({"gram", "--bogus"}).exit_code == kExitInput);
  CHECK(run_cli({"gram", "--ell", "3", "--format", "xml"}).exit_code == kExitInput);
  CHECK(run_cli({"predict"}).exit_code == kExitInput);
  CHECK(run_cli({"--help"}).exit_code == 0);

  const auto dir = std::filesystem::temp_directory_path() / "kacwreath-test-cache";
  std::filesystem::remove_all(dir);
  const CliResult first = run_cli({"predict", "--inline", kZ2Half, "--cache", dir.string()});
  const CliResult second = run_cli({"predict", "--inline", kZ2Half, "--cache", dir.string()});
  const CliResult plain = run_cli({"predict", "--inline", kZ2Half});
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == plain.out);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("Executable exit codes") {
  auto status_of = [](const std::string& args) {
    const std::string cmd = std::string(KW_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  CHECK(status_of("snf --ell 4") == 0);
  CHECK(status_of("gram --group binary_tetrahedral") == 3);
  CHECK(status_of("predict --inline '{}'") == 2);
}
