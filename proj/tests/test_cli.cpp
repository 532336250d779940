#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MFIB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_code = 0) {
  const auto r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("chambers for n = 4: eight chambers in two orbits") {
  const auto j = run_json("chambers --n 4");
  CHECK(j["chambers"].size() == 8);
  CHECK(j["orbits"].size() == 2);
  CHECK(j["hyperplanes"].size() == 3);
  int minus = 0;
  for (const auto& c : j["chambers"]) minus += c["orbit"] == "C-";
  CHECK(minus == 4);
}

TEST_CASE("classify points") {
  auto j = run_json("chambers --n 4 --classify 1/3,5/9,5/9,5/9");
  CHECK(j["id"] == "[-1,-1,-1]");
  CHECK(j["orbit"] == "C-");
  CHECK(j["regular_mu"] == true);
  CHECK(j["regular_mu_tilde"] == true);

  j = run_json("chambers --n 4 --classify 1/2,1/2,1/2,1/2");
  CHECK(j["regular_mu"] == false);
  CHECK(j["orbit"].is_null());

  CHECK(run("chambers --n 4 --classify 1/2,1/2,1/2").code == 2);
  CHECK(run("chambers --n 4 --classify 1,1,1,1").code == 2);
}

TEST_CASE("unsupported n exits with usage code") {
  CHECK(run("chambers --n 5").code == 2);
  CHECK(run("regular --n 3").code == 2);
}

TEST_CASE("regular: center parity") {
  CHECK(run_json("regular --n 4")["center_regular"] == false);
  CHECK(run_json("regular --n 7")["center_regular"] == true);
  const auto j = run_json("regular --n 5 --grid 5");
  CHECK(j["grid"]["mu_tilde_only"] == 0);
}

TEST_CASE("fiber sweeps") {
  auto j = run_json("fiber m2 --samples 0");
  CHECK(j["certificates"].empty());
  CHECK(j["pass"] == true);

  for (const char* kind : {"mq7", "mq5", "m2", "m3"}) {
    j = run_json(std::string("fiber ") + kind + " --samples 25");
    CHECK(j["pass"] == true);
    CHECK(j["certificates"].size() == 25);
  }
  j = run_json("fiber mq5 --samples 25 --orbit second");
  CHECK(j["pass"] == true);
  CHECK(j["rank_histogram"]["3"] == 25);

  CHECK(run("fiber nope").code == 2);
  CHECK(run("fiber").code == 2);
}

TEST_CASE("fiber output is byte-stable for a fixed seed") {
  const auto a = run("fiber mq5 --samples 40 --seed 7");
  const auto b = run("fiber mq5 --samples 40 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run("fiber mq5 --samples 40 --seed 8").out);
}

TEST_CASE("moment maps") {
  const auto j = run_json("moment --map mu --matrix 1,0,0,0,1,0,0,0,0,0,1,0,0,0,1,0");
  for (const auto& x : j["output"]) CHECK(x.get<double>() == doctest::Approx(0.5));
  CHECK(run("moment --map mu_hat").code == 2);
  CHECK(run("moment --map mu_hat --z 1,0,1").code == 2);
}

TEST_CASE("jacobian, transition, triangle, curve") {
  auto j = run_json("jacobian --samples 10");
  CHECK(j["rank_histogram"]["3"] == 13);

  j = run_json("transition --samples 50");
  CHECK(j["determinant"] == -1);

  j = run_json("triangle");
  CHECK(j["vertices"].size() == 3);

  j = run_json("curve --x0 0.05 --x1 0.1");
  CHECK(j["modulus_residual"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("report") {
  auto j = run_json("report --only transition");
  CHECK(j["criteria"].size() == 1);
  CHECK(j["pass"] == true);
  CHECK(run("report --only nope").code == 2);
}

TEST_CASE("bad usage") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("chambers --n notanumber").code == 2);
  CHECK(run("--help").code == 0);
}
