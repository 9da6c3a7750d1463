#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cyclezeta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count divisors") {
  auto r = run({"count", "divisors", "--space", "p1xn", "--n", "2", "--q", "2", "--multidegree", "1,1"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["count"] == "15");
  CHECK(j["count"].is_string());
  CHECK(j["error"] == 0);
  auto audited = run({"count", "divisors", "--space", "p1xn", "--n", "2", "--q", "2", "--multidegree", "1,1", "--audit"});
  REQUIRE(audited.code == 0);
  CHECK(audited.doc()["audit"]["match"] == true);
  CHECK(audited.doc()["audit"]["oracle"] == "15");
}

TEST_CASE("count zero cycles with audit") {
  auto r = run({"count", "zero-cycles", "--space", "P1^2", "--q", "2", "--k", "2", "--audit"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["count"] == "53");
  CHECK(r.doc()["audit"]["match"] == true);
}

TEST_CASE("zeta series") {
  auto r = run({"zeta", "--space", "pn", "--n", "1", "--q", "2", "--l", "0", "--kmax", "3"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["coefficients"] == json::array({"1", "3", "7", "15"}));
  CHECK(j["exponents"] == json::array({"0", "1", "2", "3"}));
  auto t = run({"zeta", "--space", "pn", "--n", "1", "--q", "2", "--l", "0", "--kmax", "3", "--t", "0.125"});
  REQUIRE(t.code == 0);
  CHECK(t.doc()["value"].get<double>() == doctest::Approx(1.513671875));
  CHECK(t.doc()["error"].get<double>() == doctest::Approx(0.125));
  auto tsv = run({"zeta", "--space", "pn", "--n", "1", "--q", "2", "--l", "0", "--kmax", "2", "--tsv"});
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.find('\t') != std::string::npos);
}

TEST_CASE("verify norms") {
  auto r = run({"verify", "norms", "--samples", "100", "--seed", "7", "--nvars", "2", "--maxdeg", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["hard_failures"] == 0);
  CHECK(r.doc()["samples"] == 100);
  auto no_seed = run({"verify", "norms", "--samples", "10"});
  CHECK(no_seed.code == 1);
  CHECK_FALSE(no_seed.err.empty());
}

TEST_CASE("numeric commands") {
  auto n = run({"norm", "--poly", "3*z1*z2 - 4"});
  REQUIRE(n.code == 0);
  CHECK(n.doc()["polys"][0]["inf"].get<double>() == 4.0);
  CHECK(n.doc()["polys"][0]["two"].get<double>() == doctest::Approx(5.0));
  auto d = run({"delta", "--form", "X1 - Y1", "--lambda", "1"});
  REQUIRE(d.code == 0);
  CHECK(d.doc()["value"].get<double>() == doctest::Approx(1 + 0.5 * std::log(2.0)).epsilon(1e-3));
  auto c = run({"divcount", "--n", "1", "--lambda", "1", "--h", "1.0986122886681098"});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["count"] == "5");
  auto h = run({"height", "ff-count", "--q", "2", "--n", "1", "--h", "1"});
  REQUIRE(h.code == 0);
  CHECK(h.doc()["count"] == "9");
  auto nv = run({"height", "nv", "--coords", "1,z"});
  REQUIRE(nv.code == 0);
  CHECK(nv.doc()["height"].get<double>() == doctest::Approx(1 + 0.5 * std::log(2.0)).epsilon(1e-3));
  auto s = run({"speczeta", "--s", "2", "--cutoff", "20", "--audit"});
  REQUIRE(s.code == 0);
  CHECK(s.doc()["audit"]["bijective"] == true);
  auto b = run({"bound", "constant", "--space", "pn", "--n", "2", "--l", "1"});
  REQUIRE(b.code == 0);
  CHECK(b.doc()["value"] == "37");
}

TEST_CASE("census emits json lines") {
  auto r = run({"census", "closed-points", "--space", "P2", "--q", "2", "--dmax", "3"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<json> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(json::parse(line));
  }
  REQUIRE(rows.size() >= 3);
  bool saw_b2 = false;
  for (const auto& row : rows) {
    if (row.contains("d") && row["d"] == 2) {
      CHECK(row["count"] == "7");
      saw_b2 = true;
    }
  }
  CHECK(saw_b2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"norm", "--poly", "z1 +"}).code == 1);
  CHECK(run({"count", "cycles", "--space", "pn", "--n", "3", "--q", "2", "--l", "1", "--k", "2"}).code == 2);
  CHECK(run({"count", "divisors", "--space", "pn", "--n", "2", "--q", "6", "--multidegree", "1"}).code == 2);
  CHECK(run({"zeta", "--space", "pn", "--n", "1", "--q", "2", "--l", "0", "--kmax", "3", "--t", "0.5"}).code == 2);
  CHECK(run({"enum", "divisors", "--space", "pn", "--n", "2", "--q", "2", "--multidegree", "6"}).code == 3);
}

TEST_CASE("repeated runs are byte identical") {
  std::vector<std::vector<std::string>> cmds = {
      {"verify", "norms", "--samples", "20", "--seed", "3", "--nvars", "2", "--maxdeg", "2"},
      {"norm", "--poly", "z1^2 - z2 + 1", "--threads", "3"},
      {"census", "sh-set", "--d", "1", "--a", "0.25", "--h", "2", "--members"},
      {"enum", "zero-cycles", "--space", "P1", "--q", "3", "--k", "2"},
  };
  for (const auto& c : cmds) {
    auto a = run(c);
    auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto one = run({"norm", "--poly", "z1^2 - z2 + 1", "--threads", "1"});
  auto many = run({"norm", "--poly", "z1^2 - z2 + 1", "--threads", "4"});
  CHECK(one.doc()["v"] == many.doc()["v"]);
}
