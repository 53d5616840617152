#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles/oracles.hpp"
#include "uenergy/certify.hpp"
#include "uenergy/errors.hpp"

using namespace uenergy;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "uenergy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

long spec_offset(const std::string& s) {
  try {
    cli::parse_graph_spec(s);
  } catch (const parse_error& e) {
    return static_cast<long>(e.offset());
  }
  return -1;
}

std::string c10_graph6() {
  oracle::EdgeList e;
  for (int i = 0; i < 10; ++i) e.push_back({i, (i + 1) % 10});
  return oracle::graph6_encode(10, e);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("graph spec parsing") {
  CHECK(cli::parse_graph_spec("C:5") == make_cycle(5));
  CHECK(cli::parse_graph_spec("P:4") == make_path(4));
  CHECK(cli::parse_graph_spec("L:7:6") == make_lollipop(7, 6));
  const std::vector<int> att{2, 0, 1, 0};
  CHECK(cli::parse_graph_spec("CP:7:4:2,0,1,0") == make_cycle_with_pendants(7, 4, att));
  CHECK(cli::parse_graph_spec("g6:" + c10_graph6()).order() == 10);

  CHECK(spec_offset("Q:5") == 0);
  CHECK(spec_offset("C5") == 0);
  CHECK(spec_offset("L:7:x") == 4);
  CHECK(spec_offset("L:x:3") == 2);
  CHECK(spec_offset("L:7") == 2);
  CHECK(spec_offset("CP:6:4:1,x,0,0") == 9);
  CHECK(spec_offset("g6:D") == 4);
  CHECK(spec_offset("C:2") == 2);
  CHECK(spec_offset("L:5:6") == 2);
}

TEST_CASE("energy command") {
  const Run all = run({"energy", "L:7:6", "--method", "all"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "L:7:6 exact 8.72057"));
  CHECK(contains(all.out, "L:7:6 eig 8.72057"));
  CHECK(contains(all.out, "L:7:6 coulson 8.72057"));
  CHECK(contains(all.out, "max deviation between routes"));

  CHECK(contains(run({"energy", "C:4"}).out, "C:4 exact 4.00000"));
  CHECK(contains(run({"energy", "g6:" + c10_graph6()}).out, "12.94427"));

  const Run js = run({"energy", "C:7", "--format", "json"});
  REQUIRE(js.code == 0);
  const json doc = json::parse(js.out);
  CHECK(doc.is_array());
  CHECK(doc.dump().find("8.987") != std::string::npos);

  const Run csv = run({"energy", "C:7", "--format", "csv"});
  CHECK(csv.out.rfind("graph,method,value,radius\n", 0) == 0);
}

TEST_CASE("energy batch from stdin") {
  const Run r = run({"energy", "-"}, c10_graph6() + "\nC:4\n\nL:7:6\n");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "g6:" + c10_graph6() + " exact 12.94427"));
  CHECK(contains(r.out, "C:4 exact 4.00000"));
  CHECK(contains(r.out, "L:7:6 exact 8.72057"));
  CHECK(run({"energy", "-"}, "C:4\nnot-a-graph\n").code == 2);
}

TEST_CASE("diff command") {
  const Run a = run({"diff", "L:7:3", "L:7:6", "--method", "coulson"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "E(L:7:3) - E(L:7:6) = 0.22026"));
  const Run b = run({"diff", "C:7", "L:7:6", "--method", "exact"});
  CHECK(contains(b.out, "= 0.26735"));
  CHECK(run({"diff", "C:7", "C:8"}).code == 1);
}

TEST_CASE("table command") {
  const Run t1 = run({"table", "1"});
  CHECK(t1.code == 0);
  CHECK(contains(t1.out, "-0.12030"));
  CHECK(contains(t1.out, "table 1: 7 rows"));

  const Run t2 = run({"table", "2", "--format", "json"});
  CHECK(t2.code == 0);
  const json doc = json::parse(t2.out);
  CHECK(doc["pass"] == true);
  bool saw_6_3 = false, saw_16_15 = false;
  for (const auto& row : doc["rows"]) {
    if (row["n"] == 6 && row["t"] == 3) saw_6_3 = std::abs(row["computed"].get<double>() + 0.45075) <= 5e-5;
    if (row["n"] == 16 && row["t"] == 15) saw_16_15 = std::abs(row["computed"].get<double>() + 0.37761) <= 5e-5;
  }
  CHECK(saw_6_3);
  CHECK(saw_16_15);

  const Run t3 = run({"table", "3", "--format", "csv"});
  CHECK(t3.code == 0);
  CHECK(contains(t3.out, "E(P_11^3),11,3,14.0073"));
  CHECK(contains(t3.out, "E(C_11),11,11,14.0533"));

  CHECK(run({"table", "4"}).code == 2);
  // a loose tolerance drifts past the 5e-5 comparison threshold
  const Run loose = run({"table", "1", "--tol", "0.5"});
  CHECK(loose.code == 4);
  CHECK(contains(loose.out, "MISMATCH"));
  // an impossible tolerance still reports; the quadrature route refuses it
  CHECK(run({"table", "1", "--method", "coulson", "--tol", "1e-200"}).code == 3);
}

TEST_CASE("search and enumerate commands") {
  const Run s = run({"search", "--n", "4"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("winner L:4:3", 0) == 0);
  const Run s8 = run({"search", "--n", "8", "--format", "json", "--jobs", "2"});
  CHECK(json::parse(s8.out)["winner"] == "L:8:6");

  CHECK(run({"enumerate", "--n", "10", "--count-only"}).out == "657\n");
  const Run e = run({"enumerate", "--n", "5", "--emit", "g6"});
  std::istringstream lines(e.out);
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    CHECK(parse_graph6(line).is_unicyclic());
    ++count;
  }
  CHECK(count == 5);
  CHECK(contains(run({"enumerate", "--n", "4"}).out, "L:4:3"));
}

TEST_CASE("certify command") {
  const Run all = run({"certify"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "all claims certified"));
  CHECK(contains(all.out, "11584"));

  const Run c2 = run({"certify", "C2", "--format", "json"});
  CHECK(c2.code == 0);
  CHECK(json::parse(c2.out)["claims"][0]["claim_id"] == "C2");

  CHECK(run({"certify", "C42"}).code == 2);

  // flip the leading coefficient of r_2 and the suite must refute
  const auto in = default_claim_inputs();
  auto r2 = to_decimal_strings(in.r[2]);
  r2.back() = r2.back()[0] == '-' ? r2.back().substr(1) : "-" + r2.back();
  const std::string path = "tampered_inputs.json";
  {
    std::ofstream f(path);
    f << json{{"r", {nullptr, nullptr, r2}}}.dump();
  }
  const Run bad = run({"certify", "all", "--inputs", path});
  CHECK(bad.code == 5);
  CHECK(contains(bad.out, "C3.2 refuted"));
  CHECK(contains(bad.out, "refutation found"));
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(run({"certify", "--inputs", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("closed-form and charpoly commands") {
  const Run cf = run({"closed-form", "--n", "11"});
  CHECK(cf.code == 0);
  CHECK(contains(cf.out, "failures 0"));
  const Run one = run({"closed-form", "--n", "9", "--t", "5", "--x", "1"});
  CHECK(contains(one.out, "-50320"));

  CHECK(run({"charpoly", "L:8:6"}).out == "x^8 - 8*x^6 + 19*x^4 - 16*x^2 + 4\n");
  const json cp = json::parse(run({"charpoly", "C:3", "--format", "json"}).out);
  CHECK(cp["coefficients"] == json{"-2", "-3", "0", "1"});
}

TEST_CASE("exit codes") {
  CHECK(run({"energy", "X:3"}).code == 2);
  CHECK(run({"energy", "C:4", "--method", "nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"energy", "C:9", "--method", "coulson", "--tol", "1e-200"}).code == 3);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "energy"));
  const Run bad = run({"energy", "L:7:x"});
  CHECK(contains(bad.err, "at byte 4"));
}
