#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include "cif/render.hpp"

namespace {
struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string command = std::string(CIF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    const Run r = cli("eval --rule strong-liberal --profile '{1};{2}'");
    CHECK(r.code == 0);
    CHECK(r.out == "{1,2} 11\n");
    CHECK(cli("eval --rule sigma:1,3,2 --profile '{3};{1,3};{1}'").out == "{3} 001\n");
    CHECK(cli("eval --rule strong-liberal --profile '{1};{4}'").code == 2);
    CHECK(cli("eval --rule bogus --profile '{1};{2}'").code == 2);
    CHECK(cli("eval --profile '{1};{2}'").code == 2);
    CHECK(cli("").code == 2);
  }

  TEST_CASE("check") {
    const Run ok = cli("check --rule strong-liberal --axioms mon,c,sym,i --n 3");
    CHECK(ok.code == 0);
    const Run bad = cli("check --rule threshold-half --axioms mon --n 3");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("MON fails") != std::string::npos);
    CHECK(cli("check --rule unanimity --axioms mon --n 5").code == 2);
    CHECK(cli("check --rule unanimity --axioms nope --n 3").code == 2);
  }

  TEST_CASE("search") {
    const Run r = cli("--format json search --axioms mon,c,el+ --n 3 --prefilter monotone-boundary");
    CHECK(r.code == 0);
    const cif::Json j = cif::Json::parse(r.out);
    CHECK(j["command"] == "search");
    CHECK(j["results"][0]["surviving"] == 1);
    CHECK(j["results"][0]["survivors"][0]["catalog_name"] == "inclusive");
    CHECK(cli("search --axioms d --class full --n 3").code == 2);
    CHECK(cli("search --axioms d --n 4").code == 2);
  }

  TEST_CASE("full scan through the cli") {
    const Run r = cli("--format json search --axioms sym,d --class full --threads 2");
    CHECK(r.code == 0);
    const cif::Json j = cif::Json::parse(r.out);
    CHECK(j["results"][0]["surviving"] == 2);
  }

  TEST_CASE("verify-paper") {
    const Run normal = cli("verify-paper --n-max 2");
    CHECK(normal.code == 0);
    CHECK(normal.out.find("summary:") != std::string::npos);
    CHECK(cli("verify-paper --n-max 2 --strict").code == 1);
    CHECK(cli("verify-paper --claim T2 --n 3").code == 0);
    CHECK(cli("verify-paper --claim P3.1 --n 3 --strict").code == 1);
    CHECK(cli("verify-paper --claim NOPE").code == 2);
  }

  TEST_CASE("json output is byte-identical across runs and thread counts") {
    const Run a = cli("--format json verify-paper --n-max 3");
    const Run b = cli("--format json verify-paper --n-max 3 --threads 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(cif::Json::parse(a.out).is_object());
  }
}
