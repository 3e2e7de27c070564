#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qseries/cli.hpp"

using namespace qseries;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify exit codes") {
  const auto ok = run({"verify", "hcf-plus"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "hcf-plus: verified (+1) to q^20\n");

  const auto flip = run({"verify", "diff-313", "--order", "12"});
  CHECK(flip.code == 0);
  CHECK(flip.out == "diff-313: verified_with_sign_flip (-1) to q^12\n");

  const auto missing = run({"verify", "hcf-plsu"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("hcf-plus") != std::string::npos);
  CHECK(run({"verify", "no-such-id"}).code == 2);
  CHECK(run({"verify", "hcf-plus", "--order", "0"}).code == 2);
  CHECK(run({"verify", "hcf-plus", "--order", "x"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse command") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "qseries_cli_good.q";
  const auto bad = dir / "qseries_cli_bad.q";
  const auto wrong = dir / "qseries_cli_wrong.q";
  std::ofstream(good) << "# two checks\n@k eta(8)/eta(2) * q^(-1/4) == poch(-,8,8)/poch(-,2,2)\nphi(1) == f(q, q)\n";
  std::ofstream(bad) << "phi(1) ==\n  eta(8)/\n";
  std::ofstream(wrong) << "phi(1) == psi(1)\n";

  const auto g = run({"parse", good.string()});
  CHECK(g.code == 0);
  CHECK(g.out == "k: verified (+1) to q^20\nidentity-2: verified (+1) to q^20\n");

  const auto b = run({"parse", bad.string()});
  CHECK(b.code == 2);
  CHECK(b.err.find(":2:9:") != std::string::npos);

  const auto w = run({"parse", wrong.string()});
  CHECK(w.code == 1);
  CHECK(w.out.find("mismatch at q^1") != std::string::npos);

  CHECK(run({"parse", (dir / "qseries_cli_absent.q").string()}).code == 2);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  std::filesystem::remove(wrong);
}

TEST_CASE("report_json") {
  CHECK(cli::report_json({}) == "[]");

  VerificationReport r;
  r.id = "x";
  r.paper_ref = "ref";
  r.order = Rational(3, 2);
  r.status = Status::Verified;
  r.resolved_sign = 1;
  r.elapsed_ms = 1.5;
  const auto j = nlohmann::ordered_json::parse(cli::report_json({r}));
  REQUIRE(j.size() == 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"id", "paper_ref", "order", "status", "resolved_sign", "first_mismatch",
                                         "elapsed_ms"});
  CHECK(j[0]["order"] == "3/2");
  CHECK(j[0]["resolved_sign"] == 1);
  CHECK(j[0]["first_mismatch"].is_null());
  CHECK(j[0]["elapsed_ms"].is_null());
  CHECK(nlohmann::json::parse(cli::report_json({r}, true))[0]["elapsed_ms"] == 1.5);

  const auto flip = nlohmann::json::parse(run({"verify", "diff-313", "--json"}).out);
  CHECK(flip[0]["resolved_sign"] == -1);
  CHECK(flip[0]["status"] == "verified_with_sign_flip");
}

TEST_CASE("json output to a file") {
  const auto path = std::filesystem::temp_directory_path() / "qseries_cli_report.json";
  const auto res = run({"verify", "prodK", "fab1", "--json", "--output", path.string()});
  CHECK(res.code == 0);
  CHECK(res.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.size() == 2);
  CHECK(j[1]["order"] == "60");
  std::filesystem::remove(path);
}

TEST_CASE("dump, list and cf") {
  const auto d = run({"dump", "qq", "--order", "8"});
  CHECK(d.code == 0);
  CHECK(d.out == "0\t1+0*sqrt2\n1\t-1+0*sqrt2\n2\t-1+0*sqrt2\n5\t1+0*sqrt2\n7\t1+0*sqrt2\n");
  CHECK(run({"dump", "eta(1/2)", "--order", "1"}).out.rfind("1/48\t", 0) == 0);
  CHECK(run({"dump", "bogus(", "--order", "3"}).code == 2);

  const auto l = run({"list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("thm44-ii\t20\t") != std::string::npos);

  const auto c = run({"cf", "h", "--q", "0.1,0.2"});
  CHECK(c.code == 0);
  std::istringstream lines(c.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "q\tcf_value\tseries_value\tabs_diff\tdepth");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 2);
  CHECK(run({"cf", "gcf", "--q", "0.2", "--k", "0.3", "--l", "0.1"}).code == 0);
  CHECK(run({"cf", "gcf", "--q", "0.2", "--k", "3", "--l", "1"}).code == 2);
  CHECK(run({"cf", "x"}).code == 2);
}
