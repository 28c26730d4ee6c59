#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "artin/errors.hpp"
#include "cli.hpp"
#include "report.hpp"

using namespace artin::cli;

namespace {

  struct Run {
    int code = 0;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
  }

  bool has_line(std::string const& text, std::string const& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (l == line) {
        return true;
      }
    }
    return false;
  }

  std::set<std::string> text_keys(std::string const& text) {
    std::set<std::string> keys;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      keys.insert(l.substr(0, l.rfind(": ")));
    }
    return keys;
  }

  int shell(std::string const& args) {
    std::string cmd = std::string(ARTIN_EXECUTABLE) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "artin_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

}  // namespace

TEST_CASE("run configuration round trip") {
  RunConfig c;
  CHECK(parse_run_config(c.render()) == c);
  c.command = "brace verify";
  c.type = "D 4";
  c.argument = "type D 4 / alpha 1:(1 2) 2:(1 2) 3:(1 2) 4:(2 3)";
  c.seed = 99;
  c.samples = 17;
  c.json = true;
  c.force = true;
  c.kmax = 3;
  CHECK(parse_run_config(c.render()) == c);
  CHECK_THROWS_AS(parse_run_config("colour: blue\n"), artin::ParseError);
  CHECK_THROWS_AS(parse_run_config("height: tall\n"), artin::ParseError);
}

TEST_CASE("report rendering") {
  Report r;
  r.header("command", "info");
  CHECK(r.empty());
  CHECK(r.text() == "command: info\n");
  r.add("order", 24);
  r.add("layers", nlohmann::ordered_json::array({1, 2, 4}));
  r.add("order", 6);
  CHECK(r.text() == "command: info\norder: 6\nlayers: 1 2 4\n");
  auto j = nlohmann::json::parse(r.json());
  CHECK(j["order"] == 6);
  CHECK(j["command"] == "info");
}

TEST_CASE("documented command examples") {
  auto info = run({"info", "--type", "A", "3"});
  CHECK(info.code == kPass);
  CHECK(has_line(info.out, "order: 24"));
  CHECK(has_line(info.out, "diagram_symmetries: 2"));

  auto rig = run({"rigidity", "--type", "I", "5"});
  CHECK(rig.code == kPass);
  CHECK(has_line(rig.out, "result: PASS"));

  auto torus = run({"brace", "torus", "--n", "4"});
  CHECK(torus.code == kPass);
  CHECK(has_line(torus.out, "sigma1^o4 == sigma2^o4: true"));
  CHECK(has_line(torus.out, "sigma1^o3 == sigma2^o3: false"));

  auto nf = run({"normal-form", "s1.s2.s1", "--type", "A", "2"});
  CHECK(has_line(nf.out, "normal_form: D"));
  CHECK(has_line(nf.out, "height: 3"));

  CHECK(has_line(run({"lattice", "--type", "A", "2", "--height", "2"}).out, "nodes: 7"));
  CHECK(has_line(run({"holomorph", "Z4"}).out, "braces: 2"));
  CHECK(has_line(run({"brace", "catalog", "--type", "D", "4"}).out, "count: 11"));
  CHECK(has_line(run({"brace", "enumerate", "--type", "D4"}).out, "count: 11"));
  CHECK(has_line(run({"brace", "center", "--type", "I", "6"}).out, "spec.1.k: 1"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"frobnicate"}).code == kUsage);
  CHECK(run({"info", "--type", "A", "3", "--bogus"}).code == kUsage);
  CHECK(run({"info", "--type", "Q", "3"}).code == kUsage);
  CHECK(run({"info"}).code == kUsage);
  CHECK(run({"info", "--type", "A", "3", "--height", "x"}).code == kUsage);
  auto bad = run({"normal-form", "s9", "--type", "A", "2"});
  CHECK(bad.code == kUsage);
  CHECK(bad.err.starts_with("error: "));

  auto invalid = run({"brace", "validate", "type A 3 / alpha 1:(1 3)"});
  CHECK(invalid.code == kFail);
  CHECK(has_line(invalid.out, "valid: false"));
  CHECK(run({"brace", "verify", "type A 3 / alpha 1:(1 3)", "--samples", "50"}).code == kUsage);
  CHECK(run({"brace", "verify", "type A 3 / alpha 1:(1 3)", "--samples", "200", "--force"}).code == kFail);
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args{"brace", "verify", "--type", "D", "4", "--samples", "40", "--seed", "7"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == kPass);
  CHECK(a.out == b.out);
  auto other = run({"brace", "verify", "--type", "D", "4", "--samples", "40", "--seed", "8"});
  CHECK(has_line(other.out, "seed: 8"));
}

TEST_CASE("json output carries the same keys") {
  for (auto args : std::vector<std::vector<std::string>>{{"info", "--type", "E", "6"},
                                                         {"rigidity", "--type", "B", "3"},
                                                         {"holomorph", "S3"},
                                                         {"brace", "torus", "--n", "5"}}) {
    auto text = run(args);
    args.push_back("--json");
    auto json = run(args);
    REQUIRE(json.code == text.code);
    auto parsed = nlohmann::json::parse(json.out);
    std::set<std::string> keys;
    for (auto const& [k, v] : parsed.items()) {
      keys.insert(k);
    }
    CHECK(keys == text_keys(text.out));
  }
}

TEST_CASE("file inputs and dot output") {
  auto matrix = scratch("b3.txt");
  std::ofstream(matrix) << "# B_3 relabelled\nrank 3\n1 4 2\n4 1 3\n2 3 1\n";
  auto info = run({"info", "--matrix", matrix.string()});
  CHECK(info.code == kPass);
  CHECK(has_line(info.out, "order: 48"));

  auto table = scratch("z3.txt");
  std::ofstream(table) << "0 1 2\n1 2 0\n2 0 1\n";
  CHECK(has_line(run({"holomorph", table.string()}).out, "braces: 1"));

  auto dot = scratch("a2.dot");
  std::filesystem::remove(dot);
  CHECK(run({"lattice", "--type", "A", "2", "--height", "1", "--dot", dot.string()}).code == kPass);
  std::ifstream in(dot);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content.starts_with("digraph ball {"));

  CHECK(run({"info", "--matrix", scratch("missing.txt").string()}).code == kUsage);
}

TEST_CASE("installed executable") {
  CHECK(shell("info --type A 3") == 0);
  CHECK(shell("rigidity --type D 4") == 0);
  CHECK(shell("brace validate 'type A 3 / alpha 1:(1 3)'") == 1);
  CHECK(shell("info --bogus") == 2);
}
