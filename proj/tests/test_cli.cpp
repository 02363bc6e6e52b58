#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "fracsum/engine.hpp"
#include "fracsum/errors.hpp"
#include "fracsum_cli/cli.hpp"

using namespace fracsum;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// "key: value" line of the plain output.
std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  FAIL("missing field " << key);
  return {};
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv(kEngineEnvVar, value, 1); }
  ~EnvGuard() { ::unsetenv(kEngineEnvVar); }
};

}  // namespace

TEST_SUITE("complex literals") {
  TEST_CASE("accepted forms") {
    CHECK(cli::parse_complex("2") == Complex(2.0));
    CHECK(cli::parse_complex("-0.5") == Complex(-0.5));
    CHECK(cli::parse_complex("1+2i") == Complex(1.0, 2.0));
    CHECK(cli::parse_complex("1-2.5i") == Complex(1.0, -2.5));
    CHECK(cli::parse_complex("1e-3+1e2i") == Complex(1e-3, 1e2));
    CHECK(cli::parse_complex("3i") == Complex(0.0, 3.0));
    CHECK(cli::parse_complex("-0.25i") == Complex(0.0, -0.25));
    CHECK(cli::parse_complex(" .5-.5i ") == Complex(0.5, -0.5));
  }

  TEST_CASE("rejected forms") {
    for (const char* bad : {"", "i", "1+", "1+i", "abc", "1+2", "1+2j", "1 + 2i", "nan", "inf", "0x1p3", "1e999", "1+-2i", "--1"}) {
      INFO(bad);
      CHECK_THROWS_AS(cli::parse_complex(bad), ParameterError);
    }
  }
}

TEST_SUITE("summand specs") {
  TEST_CASE("families") {
    for (const char* spec : {"recip", "pow:a=0.5", "pow:a=1+1i", "log", "geom:q=0.5",
                             "binom:c=0.5,x=0.3", "vlnv", "lnfact", "poly:1,0,2"}) {
      INFO(spec);
      CHECK_NOTHROW(cli::parse_summand(spec));
    }
    CHECK_THROWS_AS(cli::parse_summand("sin"), ParameterError);
    CHECK_THROWS_AS(cli::parse_summand("pow"), ParameterError);
    CHECK_THROWS_AS(cli::parse_summand("recip:a=1"), ParameterError);
    CHECK_THROWS_AS(cli::parse_summand("log", cli::Direction::kLeft), ParameterError);
    CHECK_NOTHROW(cli::parse_summand("pow:a=3", cli::Direction::kLeft));
    CHECK_THROWS_AS(cli::parse_factor("log"), ParameterError);
  }
}

TEST_SUITE("commands") {
  TEST_CASE("sum of reciprocals to -1/2") {
    const auto r = run_cli({"sum", "--f", "recip", "--from", "1", "--to", "-0.5"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.err.empty());
    CHECK(field(r.out, "value").rfind("-1.3862943611", 0) == 0);
    CHECK(std::abs(std::stod(field(r.out, "value")) + 2 * std::log(2.0)) < 1e-10);
    CHECK(field(r.out, "converged") == "true");
  }

  TEST_CASE("product of the identity to 4") {
    const auto r = run_cli({"prod", "--f", "id", "--from", "1", "--to", "4"});
    CHECK(r.code == cli::kExitOk);
    const double v = std::stod(field(r.out, "value"));
    CHECK(std::abs(v - 24.0) <= 1e-12 * 24.0);
    CHECK(std::abs(v - 24.0) <= std::stod(field(r.out, "err_estimate")));
  }

  TEST_CASE("ZHALF run") {
    const auto r = run_cli({"identity-run", "--id", "ZHALF"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("point=\"a=1\" lhs_re=-0.125 ") != std::string::npos);
  }

  TEST_CASE("left sums and complex bounds") {
    const auto r = run_cli({"sum", "--f", "geom:q=2", "--from", "0", "--to", "1", "--direction", "left"});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::abs(std::stod(field(r.out, "value")) - 3.0) < 1e-10);
    const auto c = run_cli({"sum", "--f", "recip", "--from", "1", "--to", "0+1i"});
    CHECK(c.code == cli::kExitOk);
    CHECK(field(c.out, "value").back() == 'i');
  }

  TEST_CASE("identity-list") {
    const auto r = run_cli({"identity-list"});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 19);
    CHECK(r.out.rfind("GEO theorem", 0) == 0);
  }

  TEST_CASE("figure to stdout and to a file") {
    const auto r = run_cli({"figure", "--which", "bd"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("x,closed_form,n=1,n=10,n=50\n", 0) == 0);
    const auto path = (std::filesystem::temp_directory_path() / "fracsum_cli_zeta2.csv").string();
    const auto f = run_cli({"figure", "--which", "zeta2", "--path", path});
    CHECK(f.code == cli::kExitOk);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,closed_form,n=10,n=100,n=1000");
    std::filesystem::remove(path);
  }

  TEST_CASE("csv output") {
    const auto r = run_cli({"sum", "--f", "geom:q=0.5", "--from", "0", "--to", "0.5", "--output", "csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("value_re,value_im,err_estimate,n_used,converged\n", 0) == 0);
  }
}

TEST_SUITE("exit codes") {
  TEST_CASE("parse and domain errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"sum", "--f", "nosuch", "--from", "1", "--to", "2"},
             {"sum", "--f", "recip", "--from", "1", "--to", "2+i"},
             {"sum", "--f", "recip", "--from", "0", "--to", "2"},
             {"sum", "--f", "pow:a=0.5", "--from", "1", "--to", "2", "--direction", "left"},
             {"sum", "--f", "recip", "--from", "1", "--to", "2", "--levels", "1"},
             {"prod", "--f", "poly:-2,1", "--from", "1", "--to", "3"},
             {"identity-run", "--id", "NOPE"},
             {"figure", "--which", "fig3"},
             {"figure", "--which", "bd", "--path", "/nonexistent-dir/x.csv"},
             {"frobnicate"},
             {}}) {
      const auto r = run_cli(args);
      INFO(r.err);
      CHECK(r.code == cli::kExitError);
      CHECK(r.out.empty());
      CHECK(std::count(r.err.begin(), r.err.end(), '\n') >= 1);
    }
    const auto r = run_cli({"sum", "--f", "nosuch", "--from", "1", "--to", "2"});
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }

  TEST_CASE("failing identity run") {
    const EnvGuard env("1,2,0,1e-10");
    const auto r = run_cli({"identity-run", "--id", "HARM"});
    CHECK(r.code == cli::kExitIdentityFailure);
    CHECK(r.out.find("all_pass=false") != std::string::npos);
  }

  TEST_CASE("malformed environment config") {
    const EnvGuard env("64,8");
    CHECK(run_cli({"sum", "--f", "recip", "--from", "1", "--to", "2"}).code == cli::kExitError);
  }

  TEST_CASE("explicit flags override the environment") {
    const EnvGuard env("1,2,0,1e-10");
    const auto r = run_cli({"sum", "--f", "recip", "--from", "1", "--to", "-0.5", "--n-start", "64",
                            "--levels", "8", "--order", "4"});
    CHECK(std::abs(std::stod(field(r.out, "value")) + 2 * std::log(2.0)) < 1e-10);
  }
}

TEST_SUITE("output invariants") {
  TEST_CASE("json reproduces the plain values") {
    for (const auto& base : std::vector<std::vector<std::string>>{
             {"sum", "--f", "recip", "--from", "1", "--to", "-0.5"},
             {"sum", "--f", "pow:a=0.5", "--from", "1", "--to", "0.5+0.5i"},
             {"prod", "--f", "id", "--from", "1", "--to", "4"}}) {
      const auto plain = run_cli(base);
      auto with_json = base;
      with_json.insert(with_json.end(), {"--output", "json"});
      const auto js = run_cli(with_json);
      REQUIRE(js.code == cli::kExitOk);
      const json j = json::parse(js.out);
      const Complex value(j["value"]["re"].get<double>(), j["value"]["im"].get<double>());
      CHECK(cli::parse_complex(field(plain.out, "value")) == value);
      CHECK(std::stod(field(plain.out, "err_estimate")) == j["err_estimate"].get<double>());
      CHECK((field(plain.out, "converged") == "true") == j["converged"].get<bool>());
      CHECK(j["levels"].size() == 8);
      CHECK(j["n_used"].get<long>() >= 64);
    }
  }

  TEST_CASE("identical arguments give identical bytes") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"identity-run"},
             {"identity-run", "--output", "json"},
             {"sum", "--f", "lnfact", "--from", "1", "--to", "0.5", "--output", "json"},
             {"figure", "--which", "zeta2"}}) {
      const auto a = run_cli(args);
      const auto b = run_cli(args);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("the installed binary behaves like run()") {
    const std::string cmd = std::string(FRACSUM_TOOL_PATH) + " sum --f recip --from 1 --to -0.5";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe)) text += buf;
    const int status = ::pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(text == run_cli({"sum", "--f", "recip", "--from", "1", "--to", "-0.5"}).out);
    const std::string bad = std::string(FRACSUM_TOOL_PATH) + " sum --f nosuch --from 1 --to 2 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(bad.c_str())) == cli::kExitError);
  }
}
