#include "qseries/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "qseries/catalog.hpp"
#include "qseries/cfrac.hpp"
#include "qseries/error.hpp"
#include "qseries/parser.hpp"

namespace qseries::cli {

namespace {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_q(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string format_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Rational parse_order(const std::string& text) {
  const Rational r = Rational::parse(text);
  if (r.sign() <= 0) throw CLI::ValidationError("--order", "order must be positive, got " + text);
  return r;
}

// Short names for the dump command; anything else is parsed as an expression.
const std::map<std::string, std::string, std::less<>>& block_aliases() {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"qq", "poch(-, 1, 1)"}, {"phi", "phi(1)"},     {"psi", "psi(1)"},     {"gamma1", "G1(1)"},
      {"gamma2", "G2(1)"},     {"gamma3", "G3(1)"},   {"h", "H(1)"},         {"i", "I(1)"},
      {"eta", "eta(1)"},       {"theta1n1", "T1N(1)"}, {"theta1n2", "T1N(2)"}, {"theta1n3", "T1N(3)"},
  };
  return aliases;
}

int finish(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.ok()) return kFailed;
  }
  return kOk;
}

int emit_reports(const std::vector<VerificationReport>& reports, bool json, bool timings, const std::string& output,
                 std::ostream& out, std::ostream& err) {
  std::string text;
  if (json) {
    text = report_json(reports, timings) + "\n";
  } else {
    for (const auto& r : reports) text += describe(r, timings) + "\n";
  }
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return kUsage;
    }
    file << text;
  }
  return finish(reports);
}

int cmd_list(std::ostream& out) {
  for (const Identity& idy : catalog()) {
    out << idy.id << "\t" << idy.default_order.str() << "\t" << idy.paper_ref << "\n";
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& ids, const std::string& order_text, bool json, bool timings,
               const std::string& output, unsigned jobs, std::ostream& out, std::ostream& err) {
  std::vector<Identity> selected;
  for (const std::string& id : ids) {
    if (id == "all") {
      selected.insert(selected.end(), catalog().begin(), catalog().end());
      continue;
    }
    const Identity* idy = find_identity(id);
    if (!idy) {
      err << "error: unknown identity '" << id << "'";
      const auto close = near_matches(id);
      if (!close.empty()) {
        err << "; did you mean:";
        for (const auto& c : close) err << " " << c;
      }
      err << "\n";
      return kUsage;
    }
    selected.push_back(*idy);
  }
  std::optional<Rational> order;
  if (!order_text.empty()) order = parse_order(order_text);
  return emit_reports(verify_all(selected, order, jobs), json, timings, output, out, err);
}

int cmd_dump(const std::string& target, const std::string& order_text, std::ostream& out) {
  const auto alias = block_aliases().find(target);
  const ExprPtr expr = parse_expr(alias != block_aliases().end() ? alias->second : target);
  const Rational order = parse_order(order_text);
  out << dump(evaluate(*expr, order).truncated(order));
  return kOk;
}

int cmd_cf(const std::string& which, const std::vector<double>& qs, double tol, double k, double l, std::ostream& out) {
  out << "q\tcf_value\tseries_value\tabs_diff\tdepth\n";
  for (const double q : qs) {
    CFEvaluation cf;
    double reference = 0.0;
    if (which == "h") {
      cf = eval_h_cf(q, tol);
      reference = h_series_value(q);
    } else if (which == "i") {
      cf = eval_i_cf(q, tol);
      reference = i_series_value(q);
    } else {
      cf = eval_general_cf(k, l, q, tol);
      reference = general_cf_product(k, l, q);
    }
    out << format_q(q) << "\t" << format_double(cf.value) << "\t" << format_double(reference) << "\t"
        << format_short(std::abs(cf.value - reference)) << "\t" << cf.depth_used;
    if (!cf.converged) out << "\t(not converged)";
    if (cf.floored) out << "\t(floored)";
    out << "\n";
  }
  return kOk;
}

int cmd_parse(const std::string& path, const std::string& order_text, bool json, bool timings, unsigned jobs,
              std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::vector<Identity> identities;
  try {
    identities = parse_identities(buffer.str());
  } catch (const ParseError& e) {
    err << path << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kUsage;
  }
  for (auto& idy : identities) idy.paper_ref = path;
  std::optional<Rational> order;
  if (!order_text.empty()) order = parse_order(order_text);
  return emit_reports(verify_all(identities, order, jobs), json, timings, "", out, err);
}

}  // namespace

std::string describe(const VerificationReport& r, bool timings) {
  std::ostringstream s;
  s << r.id << ": " << to_string(r.status);
  switch (r.status) {
    case Status::Verified:
    case Status::VerifiedWithSignFlip:
      s << " (" << (*r.resolved_sign > 0 ? "+1" : "-1") << ") to q^" << r.order.str();
      break;
    case Status::Mismatch:
      if (r.first_mismatch) {
        s << " at q^" << r.first_mismatch->exponent.str() << ": lhs " << r.first_mismatch->lhs.str() << ", rhs "
          << r.first_mismatch->rhs.str();
      }
      break;
    case Status::InsufficientPrecision:
      s << ": " << r.message;
      break;
  }
  if (timings) s << " [" << format_short(r.elapsed_ms) << " ms]";
  return s.str();
}

std::string report_json(const std::vector<VerificationReport>& reports, bool timings) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["id"] = r.id;
    j["paper_ref"] = r.paper_ref;
    j["order"] = r.order.str();
    j["status"] = to_string(r.status);
    j["resolved_sign"] = r.resolved_sign ? ordered_json(*r.resolved_sign) : ordered_json(nullptr);
    if (r.first_mismatch) {
      j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent.str()},
                             {"lhs", r.first_mismatch->lhs.str()},
                             {"rhs", r.first_mismatch->rhs.str()}};
    } else {
      j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = timings ? ordered_json(r.elapsed_ms) : ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-series identities", "qseries"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List catalog identities");

  std::vector<std::string> ids;
  std::string order_text;
  bool json = false;
  bool timings = false;
  std::string output;
  unsigned jobs = 0;
  auto* verify = app.add_subcommand("verify", "Verify catalog identities ('all' for every entry)");
  verify->add_option("ids", ids, "Identity ids")->required();
  verify->add_option("--order", order_text, "Compare coefficients below q^R (overrides each default)");
  verify->add_flag("--json", json, "Emit a JSON array of reports");
  verify->add_option("--output,-o", output, "Write the report to a file instead of stdout");
  verify->add_option("--jobs,-j", jobs, "Worker threads (0 = hardware concurrency)");
  verify->add_flag("--timings", timings, "Include elapsed times");

  std::string target;
  std::string dump_order = "20";
  auto* dump_cmd = app.add_subcommand("dump", "Print the expansion of a block or expression");
  dump_cmd->add_option("block", target, "qq, phi, psi, gamma1..3, h, i, eta, theta1n1..3 or an expression")
      ->required();
  dump_cmd->add_option("--order", dump_order, "Print terms below q^R");

  std::string which;
  std::vector<double> qs{0.05, 0.1, 0.2, 0.3};
  double tol = 1e-15;
  double k = 0.3;
  double l = 0.1;
  auto* cf = app.add_subcommand("cf", "Compare a continued fraction with its product form");
  cf->add_option("fraction", which, "h, i or gcf")->required()->check(CLI::IsMember({"h", "i", "gcf"}));
  cf->add_option("--q", qs, "Values of q")->delimiter(',');
  cf->add_option("--tol", tol, "Convergence tolerance");
  cf->add_option("--k", k, "k for gcf");
  cf->add_option("--l", l, "l for gcf");

  std::string path;
  std::string parse_order_text;
  bool parse_json = false;
  auto* parse = app.add_subcommand("parse", "Parse an identity file and verify its entries");
  parse->add_option("file", path, "File of identities")->required();
  parse->add_option("--order", parse_order_text, "Compare coefficients below q^R");
  parse->add_flag("--json", parse_json, "Emit a JSON array of reports");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list(out);
    if (*verify) return cmd_verify(ids, order_text, json, timings, output, jobs, out, err);
    if (*dump_cmd) return cmd_dump(target, dump_order, out);
    if (*cf) return cmd_cf(which, qs, tol, k, l, out);
    if (*parse) return cmd_parse(path, parse_order_text, parse_json, false, jobs, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qseries::cli
