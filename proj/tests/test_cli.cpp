#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#ifndef POLAR_CLI
#error "POLAR_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(POLAR_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("suborbits command") {
  auto r = run("suborbits --q 3 --nu 2 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 8);
  CHECK(j["total"] == "243");
  CHECK(j["rank"] == 8);
  auto r1 = run("suborbits --q 3 --nu 1 --format json");
  CHECK(nlohmann::json::parse(r1.out)["rows"].size() == 3);
  CHECK(nlohmann::json::parse(r1.out)["total"] == "9");
  CHECK(run("suborbits --q 4 --nu 2").code == 2);
  CHECK(run("suborbits --q 3 --nu 0").code == 2);
  CHECK(run("suborbits --q 3 --format xml").code == 2);
  CHECK(run("suborbits --nu 2").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("suborbits --q 3 --format csv").out.rfind("label,size,displayed,cumulative\n", 0) == 0);
}

TEST_CASE("verify command") {
  auto s = run("verify --q 3 --nu 2 --suite suborbits");
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["suites"]["suborbits"]["orbit_count"] == 8);
  auto q = run("verify --q 3 --nu 2 --suite qsrg");
  CHECK(q.code == 1);
  auto jq = nlohmann::json::parse(q.out)["suites"]["qsrg"];
  CHECK(jq["params"]["lambda"] == 14);
  CHECK(jq["observed"]["lambda_hist"] == nlohmann::json{{"7", 3888}});
  auto sc = run("verify --q 3 --nu 2 --suite scheme");
  CHECK(sc.code == 0);
  auto all = run("verify --q 3 --nu 2 --suite all");
  CHECK(all.code == 1);
  auto j = nlohmann::json::parse(all.out);
  CHECK(j["suites"]["suborbits"]["passed"] == true);
  CHECK(j["suites"]["scheme"]["passed"] == true);
  CHECK(j["suites"]["qsrg"]["passed"] == false);
  CHECK(run("verify --q 3 --nu 3 --suite suborbits").code == 0);
  CHECK(run("verify --q 3 --nu 1 --suite all").code == 0);
  CHECK(run("verify --q 3 --nu 3 --suite scheme").code == 2);
  CHECK(run("verify --q 3 --nu 3 --suite suborbits --vertex-cap 100").code == 2);
}

TEST_CASE("graph, scheme and classify commands") {
  auto g = run("graph --q 3 --nu 2 --format edgelist");
  CHECK(g.code == 0);
  CHECK(g.out.rfind("243 3888\n", 0) == 0);
  CHECK(run("graph --q 3 --nu 2 --format graphml").code == 2);
  auto s = run("scheme --q 3");
  CHECK(s.code == 0);
  auto js = nlohmann::json::parse(s.out);
  CHECK(js["class"] == 7);
  CHECK(js["p1_check"]["passed"] == true);
  CHECK(run("scheme --q 3 --nu 3").code == 2);
  CHECK(run("scheme --q 3 --format csv").out.rfind("# k=R0\n", 0) == 0);
  auto c = run(R"(classify --q 3 --nu 2 --vertex '{"X":[0,0,0,0],"Z":[1,0,0,0]}')");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["label"] == "phi2(0;a=0)");
  CHECK(run(R"(classify --q 3 --nu 2 --vertex '{"X":[0,0,0,0]}')").code == 2);
  CHECK(run(R"(classify --q 3 --nu 2 --vertex 'not json')").code == 2);
  CHECK(run(R"(classify --q 3 --nu 2 --vertex '{"X":[0,1,1,0],"Z":[0,0,0,0]}')").code == 2);
}

TEST_CASE("every command is deterministic") {
  for (const char* args : {"suborbits --q 5 --nu 3 --format json", "verify --q 3 --nu 2 --suite all",
                           "graph --q 3 --nu 2 --format json", "scheme --q 5 --threads 2",
                           R"(classify --q 5 --nu 2 --vertex '{"X":[0,3,2,0],"Z":[1,4,2,2]}')"}) {
    CAPTURE(args);
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  auto t1 = run("scheme --q 5 --threads 1"), t3 = run("scheme --q 5 --threads 3");
  CHECK(t1.out == t3.out);
}
