#include <doctest.h>

#include <cstdio>
#include <string>

#include "burnlab/cli.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/report.hpp"

#include "oracles.hpp"

using namespace burnlab;
using namespace burnlab::cli;

namespace {

std::string data_path(const char* name) {
  return std::string(BURNLAB_DATA_DIR) + "/" + name;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("run report JSON shape") {
  RunReport rep;
  rep.command = "order";
  rep.inputs["file"] = "x.grp";
  rep.results["order"] = 5;
  rep.elapsed_ms = 17;

  Json ok = rep.to_json();
  CHECK(ok["command"] == "order");
  CHECK(ok["status"] == "ok");
  CHECK(!ok.contains("error"));
  CHECK(ok["elapsed_ms"] == 17);
  CHECK_NOTHROW(validate_run_report(ok));

  // Key order is fixed, and timing can be suppressed.
  CHECK(ok.dump().rfind("{\"command\":", 0) == 0);
  Json untimed = rep.to_json(false);
  CHECK(!untimed.contains("elapsed_ms"));
  CHECK_NOTHROW(validate_run_report(untimed));

  rep.status = "error";
  rep.error_code = "domain_error";
  rep.error_message = "bad input";
  Json err = rep.to_json();
  CHECK(err["error"]["code"] == "domain_error");
  CHECK(err["error"]["message"] == "bad input");
  CHECK_NOTHROW(validate_run_report(err));
}

TEST_CASE("run report validation rejects malformed reports") {
  Json good = Json::object();
  good["command"] = "order";
  good["inputs"] = Json::object();
  good["results"] = Json::object();
  good["status"] = "ok";
  CHECK_NOTHROW(validate_run_report(good));

  CHECK_THROWS_AS(validate_run_report(Json::array()), DomainError);

  Json j = good;
  j.erase("command");
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j = good;
  j["command"] = "";
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j = good;
  j["inputs"] = 3;
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j = good;
  j["results"] = "nope";
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j = good;
  j["status"] = "maybe";
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j = good;
  j["status"] = "error";  // error status without error object
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j["error"] = Json{{"code", ""}, {"message", "m"}};
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j["error"] = Json{{"code", "x"}};
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j["error"] = Json{{"code", "x"}, {"message", "m"}};
  CHECK_NOTHROW(validate_run_report(j));
  j = good;
  j["elapsed_ms"] = -1;
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
  j = good;
  j["elapsed_ms"] = 1.5;
  CHECK_THROWS_AS(validate_run_report(j), DomainError);
}

TEST_CASE("error classes map onto exit codes and error codes") {
  auto both = [](const Error& e) {
    return std::pair<int, std::string>(exit_code_for(e), error_code_for(e));
  };
  CHECK(both(ParseError(3, 7, "bad")) == std::pair<int, std::string>(2, "parse_error"));
  CHECK(both(DomainError("d")) == std::pair<int, std::string>(2, "domain_error"));
  CHECK(both(CapacityError("c")) == std::pair<int, std::string>(3, "capacity_error"));
  CHECK(both(NotFoundError("n")) == std::pair<int, std::string>(3, "not_found"));
  CHECK(both(StateError("s")) == std::pair<int, std::string>(3, "state_error"));
  CHECK(both(SingularityError("s")) == std::pair<int, std::string>(3, "singularity_error"));
  CHECK(both(NumericError("n")) == std::pair<int, std::string>(3, "numeric_error"));
  CHECK(both(IoError("i")) == std::pair<int, std::string>(4, "io_error"));
  CHECK(both(UndecidedError("u")) == std::pair<int, std::string>(5, "undecided"));

  ParseError pe(3, 7, "bad");
  CHECK(pe.line == 3);
  CHECK(pe.col == 7);
  CHECK(std::string(pe.what()) == "line 3, col 7: bad");
}

TEST_CASE("file helpers round-trip and report I/O failures") {
  TempFile tmp("cli_test_io.txt");
  write_file(tmp.path, "hello\nworld\n");
  CHECK(read_file(tmp.path) == "hello\nworld\n");
  CHECK_THROWS_AS(read_file("no/such/file.txt"), IoError);
  CHECK_THROWS_AS(write_file("no/such/dir/file.txt", "x"), IoError);
}

TEST_CASE("order command reports the group order") {
  GlobalOpts opts;
  RunReport rep = cmd_order(data_path("c5.grp"), opts, "");
  CHECK(rep.status == "ok");
  CHECK(rep.results["order"] == 5);
  CHECK(rep.results["ngens"] == 1);
  CHECK(rep.results["table_hash"].get<std::string>().size() == 16);

  // Determinism: identical reports (minus timing) on repeat runs.
  RunReport again = cmd_order(data_path("c5.grp"), opts, "");
  CHECK(rep.to_json(false).dump() == again.to_json(false).dump());

  CHECK_THROWS_AS(cmd_order("missing.grp", opts, ""), IoError);

  GlobalOpts tight;
  tight.max_cosets = 2000;
  CHECK_THROWS_AS(cmd_order(data_path("pq.grp"), tight, ""), CapacityError);
}

TEST_CASE("order command can persist the coset table") {
  GlobalOpts opts;
  TempFile tmp("cli_test_c5_table.json");
  RunReport rep = cmd_order(data_path("c5.grp"), opts, tmp.path);
  CHECK(rep.results["table_file"] == tmp.path);
  Json table = Json::parse(read_file(tmp.path));
  CHECK(table["nrows"] == 5);
  CHECK(table["gens"] == Json::array({"a"}));
}

TEST_CASE("burnside command certifies small orders") {
  GlobalOpts opts;
  RunReport rep = cmd_burnside(2, 3, 6, opts, "");
  CHECK(rep.results["m"] == 2);
  CHECK(rep.results["n"] == 3);
  CHECK(rep.results["order"] == 27);
  CHECK(rep.results["certified"] == true);

  GlobalOpts tight;
  tight.max_cosets = 20000;
  CHECK_THROWS_AS(cmd_burnside(2, 5, 3, tight, ""), UndecidedError);
}

TEST_CASE("verify pipeline agrees on every stage") {
  GlobalOpts opts;
  RunReport rep = cmd_verify504(opts, "", "");
  CHECK(rep.status == "ok");
  CHECK(rep.results["psl_order"] == oracles::kPsl28Order);
  CHECK(rep.results["simple"] == true);
  CHECK(rep.results["presentation_order"] == 504);
  CHECK(rep.results["witness_found"] == true);
  CHECK(rep.results["isomorphic"] == true);

  // A weakened relator must flip the verdict and suggest a failure exit.
  RunReport bad = cmd_verify504(opts, "", "a^6");
  CHECK(bad.status == "error");
  CHECK(bad.error_code == "verification_failed");
  CHECK(bad.exit_code == 3);
  CHECK(bad.results["presentation_order"] == 6);
  CHECK(bad.results["isomorphic"] == false);
}

TEST_CASE("matrix sample command matches the frozen closure data") {
  GlobalOpts opts;
  RunReport rep = cmd_fricke_mod8(opts);
  CHECK(rep.results["order"] == oracles::kFrickeMod8Order);
  CHECK(rep.results["exponent"] == oracles::kFrickeMod8Exponent);
  Json hist = rep.results["element_order_histogram"];
  CHECK(hist.size() == oracles::kFrickeMod8OrderHistogram.size());
  for (const auto& [ord, cnt] : oracles::kFrickeMod8OrderHistogram)
    CHECK(hist.at(std::to_string(ord)) == cnt);
}

TEST_CASE("series command writes the CSV and reports decay") {
  GlobalOpts opts;
  TempFile csv("cli_test_series.csv");
  RunReport rep = cmd_poincare(data_path("schottky_two_pairs.json"), opts, csv.path, "");
  CHECK(rep.status == "ok");
  CHECK(rep.results["csv"] == csv.path);
  CHECK(rep.results["d"] == -4);
  CHECK(rep.results["K"] == 8);
  CHECK(rep.results["shell_counts"].size() == 9);
  CHECK(rep.results["shell_counts"][0] == 1);
  CHECK(rep.results["shell_counts"][8] == 8748);
  double last = rep.results["last_decay_ratio"].get<double>();
  CHECK(last > 0.0);
  CHECK(last < 1.0);

  std::string csv_text = read_file(csv.path);
  CHECK(csv_text.rfind("k,count,shell_sum,ratio,partial_re,partial_im\n", 0) == 0);
}

TEST_CASE("dimension count command") {
  GlobalOpts opts;
  RunReport rep = cmd_dimension_count(3, 2, opts);
  CHECK(rep.results["zeros"] == 6);
  CHECK(rep.results["independents"] == 7);
  CHECK(rep.results["arbitraries_left"] == 1);
  CHECK(rep.results["arbitraries_required"] == 2);
  CHECK(rep.results["deficiency"] == 1);
  CHECK_THROWS_AS(cmd_dimension_count(0, 2, opts), DomainError);
}

TEST_CASE("render command produces DOT and SVG artifacts") {
  GlobalOpts opts;
  TempFile table("cli_test_render_table.json");
  TempFile dot("cli_test_render.dot");
  cmd_order(data_path("c5.grp"), opts, table.path);

  RunReport rep = cmd_render("cayley", table.path, dot.path, 40.0, opts);
  CHECK(rep.results["nodes"] == 5);
  CHECK(rep.results["edges"] == 5);
  CHECK(read_file(dot.path).rfind("digraph cayley {", 0) == 0);

  CHECK_THROWS_WITH_AS(cmd_render("mystery", table.path, dot.path, 40.0, opts),
                       "unknown render kind 'mystery' (expected cayley or hexagon)", DomainError);

  TempFile btable("cli_test_render_b23.json");
  TempFile svg("cli_test_render.svg");
  cmd_order(data_path("b23.grp"), opts, btable.path);
  RunReport hex = cmd_render("hexagon", btable.path, svg.path, 40.0, opts);
  CHECK(hex.results["triangles"] == 54);
  CHECK(hex.results["black"] == 27);
  CHECK(hex.results["white"] == 27);
  CHECK(read_file(svg.path).rfind("<svg", 0) == 0);
}
