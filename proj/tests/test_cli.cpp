#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// PSHND_CLI_PATH is injected by the build; args are joined with single-quote
// shell quoting, stderr is dropped unless the caller merges it
RunResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
  std::string cmd = PSHND_CLI_PATH;
  for (const auto& a : args) {
    REQUIRE(a.find('\'') == std::string::npos);
    cmd += " '" + a + "'";
  }
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;)
    r.out.append(buf, n);
  const int rc = pclose(pipe);
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  r.status = WEXITSTATUS(rc);
  return r;
}

json parse_out(const RunResult& r) {
  return json::parse(r.out);
}

std::string tmp_path(const char* stem) {
  std::ostringstream os;
  os << "/tmp/pshnd-cli-test-" << getpid() << "-" << stem;
  return os.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* kStock =
    "abs2(z^2*w^2 + z^10*w + z*w^10) + abs2(z^4*w^2 + z^4*w^8)";

}  // namespace

TEST_CASE("diagram subcommand reports the bidegree support") {
  const auto r = run_cli({"diagram", "abs2(z)^3"});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  CHECK(doc["command"] == "diagram");
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["inputs"]["expr"] == "abs2(z)^3");
  CHECK(doc["results"]["diagram"] == json::parse("[[6,0]]"));
}

TEST_CASE("envelope keys are emitted in a fixed order") {
  const auto r = run_cli({"diagram", "nsq"});
  CHECK(r.status == 0);
  const auto command = r.out.find("\"command\"");
  const auto inputs = r.out.find("\"inputs\"");
  const auto results = r.out.find("\"results\"");
  const auto version = r.out.find("\"version\"");
  REQUIRE(version != std::string::npos);
  CHECK(command < inputs);
  CHECK(inputs < results);
  CHECK(results < version);
}

TEST_CASE("expand lists every monomial of the stock polynomial") {
  const auto r = run_cli({"expand", kStock});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  CHECK(doc["results"]["expansion"]["terms"].size() == 13);
  for (const auto& t : doc["results"]["expansion"]["terms"]) {
    CHECK(t["exponents"].size() == 4);
    CHECK(t["coeff"].contains("re"));
  }
  CHECK(doc["results"]["expansion"]["text"].get<std::string>().find("z") !=
        std::string::npos);
}

TEST_CASE("extreme reports the five stock records with exact lines") {
  const auto r = run_cli({"extreme", kStock});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  const json& recs = doc["results"]["records"];
  REQUIRE(recs.size() == 5);
  CHECK(recs[1]["kind"] == "edge");
  CHECK(recs[1]["points"] == json::parse("[[2,20],[3,12],[4,4]]"));
  CHECK(recs[1]["line"]["slope"] == "-8/1");
  CHECK(recs[1]["line"]["intercept"] == "36/1");
  CHECK(recs[1]["weights"] == json::parse("[8,1]"));
  CHECK(recs[0]["kind"] == "point");
  CHECK(recs[0]["weights"] == json::parse("[9,1]"));
}

TEST_CASE("restrict filters by explicit points or by hull") {
  const auto r = run_cli(
      {"restrict", kStock, "--points", "[[4,4],[12,3],[20,2],[4,4]]"});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  CHECK(doc["results"]["points_used"] == json::parse("[[4,4],[12,3],[20,2]]"));
  CHECK(doc["results"]["restriction"]["terms"].size() == 4);

  const auto h = run_cli({"restrict", kStock, "--hull-of",
                          "[[2,20],[3,12],[4,4],[12,3],[20,2]]"});
  CHECK(h.status == 0);
  const json hd = parse_out(h);
  CHECK(hd["results"]["points_used"].size() == 138);
  CHECK(hd["results"]["restriction"]["terms"].size() == 12);
}

TEST_CASE("restrict demands exactly one point source") {
  CHECK(run_cli({"restrict", "nsq", "--points", "[[0,2]]", "--hull-of",
                 "[[0,2]]"},
                true)
            .status == 1);
  CHECK(run_cli({"restrict", "nsq"}, true).status == 1);
  const auto bad = run_cli({"restrict", "nsq", "--points", "[[1]]"}, true);
  CHECK(bad.status == 1);
  CHECK(bad.out.find("error") != std::string::npos);
}

TEST_CASE("levi emits the four Hessian entries") {
  const auto r = run_cli({"levi", "nsq"});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  CHECK(doc["results"]["levi"]["zz"]["text"] == "1");
  CHECK(doc["results"]["levi"]["ww"]["text"] == "1");
  CHECK(doc["results"]["levi"]["wz"]["text"] == "0");
  CHECK(doc["results"]["levi"]["zw"]["text"] == "0");
}

TEST_CASE("det with and without the decomposition") {
  const auto direct = run_cli({"det", "nsq"});
  CHECK(direct.status == 0);
  CHECK(parse_out(direct)["results"]["det"]["text"] == "1");

  const auto formula = run_cli({"det", "abs2(z) + abs2(w)", "--formula"});
  CHECK(formula.status == 0);
  const json doc = parse_out(formula);
  REQUIRE(doc["results"]["terms"].size() == 1);
  CHECK(doc["results"]["terms"][0]["sign"] == 1);
  CHECK(doc["results"]["det"]["text"] == "1");

  // --formula demands a sum of abs2 summands
  const auto reject = run_cli({"det", "z", "--formula"}, true);
  CHECK(reject.status == 1);
}

TEST_CASE("transform substitutes powers and keeps the lowest part") {
  const auto r = run_cli({"transform", "z*w + z^3", "--weights", "2,3"});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  CHECK(doc["results"]["substituted"]["text"] == "z^2*w^3 + z^6");
  CHECK(doc["results"]["lowest_order_part"]["text"] == "z^2*w^3");

  CHECK(run_cli({"transform", "z", "--weights", "0,2"}, true).status == 1);
  CHECK(run_cli({"transform", "z", "--weights", "2,3x"}, true).status == 1);
  CHECK(run_cli({"transform", "z"}, true).status == 1);  // --weights required
}

TEST_CASE("psh-check exit code distinguishes the verdicts") {
  const auto clean = run_cli({"psh-check", "nsq", "--radius", "1", "--samples",
                              "200", "--seed", "5", "--tol", "1e-9"});
  CHECK(clean.status == 0);
  const json cd = parse_out(clean);
  CHECK(cd["results"]["report"]["verdict"] == "no-violation-found");
  CHECK(cd["results"]["report"]["samples_used"] == 200);
  CHECK(cd["results"]["report"]["violation"].is_null());

  const auto hit = run_cli({"psh-check", "0 - abs2(z)", "--radius", "1",
                            "--samples", "50", "--seed", "1", "--tol", "1e-9"});
  CHECK(hit.status == 2);
  const json hd = parse_out(hit);
  CHECK(hd["results"]["report"]["verdict"] == "violated");
  CHECK(hd["results"]["report"]["violation"]["lambda_min"].get<double>() < 0.0);
  CHECK(hd["results"]["report"]["violation"]["z"].size() == 2);
}

TEST_CASE("witness reports a verified point or an honest miss") {
  const auto hit = run_cli(
      {"witness", "0 - nsq", "--curve", "z + w", "--radius", "0.5"});
  CHECK(hit.status == 2);
  const json hd = parse_out(hit);
  CHECK(hd["results"]["verdict"] == "violated");
  CHECK(hd["results"]["violation"]["lambda_min"].get<double>() < 0.0);
  CHECK(hd["results"]["violation"]["context"].get<std::string>().find("exact") !=
        std::string::npos);

  const auto miss = run_cli({"witness", "nsq", "--curve", "w", "--radius", "0.5"});
  CHECK(miss.status == 0);
  const json md = parse_out(miss);
  CHECK(md["results"]["verdict"] == "no-violation-found");
  CHECK(md["results"]["violation"].is_null());
  CHECK(!md["results"]["detail"].get<std::string>().empty());
}

TEST_CASE("SVG rendering is deterministic") {
  const std::string p1 = tmp_path("a.svg");
  const std::string p2 = tmp_path("b.svg");
  const auto r1 = run_cli({"diagram", kStock, "--svg", p1});
  const auto r2 = run_cli({"diagram", kStock, "--svg", p2});
  CHECK(r1.status == 0);
  CHECK(r2.status == 0);
  CHECK(parse_out(r1)["inputs"]["svg"] == p1);
  const std::string s1 = slurp(p1);
  CHECK(s1 == slurp(p2));
  CHECK(s1.rfind("<svg", 0) == 0);
  CHECK(s1.find("stroke-dasharray") != std::string::npos);  // hull chain
  CHECK(s1.find("(4,4)") != std::string::npos);             // point label
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("verify-paper runs the whole battery") {
  const auto r = run_cli({"verify-paper"});
  CHECK(r.status == 0);
  const json doc = parse_out(r);
  CHECK(doc["results"]["total"] == 33);
  CHECK(doc["results"]["failed"] == 0);
  REQUIRE(doc["results"]["checks"].size() == 33);
  for (const auto& c : doc["results"]["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(!c["name"].get<std::string>().empty());
  }
}

TEST_CASE("usage and parse failures exit with status 1") {
  CHECK(run_cli({"bogus"}, true).status == 1);
  CHECK(run_cli({}, true).status == 1);  // a subcommand is required
  CHECK(run_cli({"expand"}, true).status == 1);

  const auto perr = run_cli({"expand", "q + w"}, true);
  CHECK(perr.status == 1);
  CHECK(perr.out.find("parse error at 1:1") != std::string::npos);

  const auto version = run_cli({"--version"});
  CHECK(version.status == 0);
  CHECK(version.out == "0.1.0\n");
}
