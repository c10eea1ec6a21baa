// subflag: curvature reports, holonomy flags and self-verification for
// three-dimensional sub-Riemannian model groups.
//
// Exit codes: 0 success, 1 a verification criterion failed, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subflag/report.hpp"
#include "subflag/verify.hpp"

namespace {

using namespace subflag;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ParameterFlags {
  std::optional<std::string> rho, chi, kappa, alpha, beta;

  void attach(CLI::App& app, bool with_rho) {
    if (with_rho) app.add_option("--rho", rho, "Cartan parameter (exact: 2, -1/3, 0.25)");
    app.add_option("--chi", chi, "connection parameter chi");
    app.add_option("--kappa", kappa, "connection parameter kappa");
    app.add_option("--alpha", alpha, "U-term coefficient alpha");
    app.add_option("--beta", beta, "U-term coefficient beta");
  }

  void apply(ReportRequest& req) const {
    if (rho) req.rho = parse_rational(*rho);
    const bool any = chi || kappa || alpha || beta;
    if (!any) return;
    if (!(chi && kappa && alpha && beta))
      throw UsageError("--chi, --kappa, --alpha and --beta must be given together");
    req.params = ConnectionParameters<Rational>{parse_rational(*chi), parse_rational(*kappa),
                                                parse_rational(*alpha), parse_rational(*beta)};
  }
};

Vec3<double> parse_point(const std::string& text) {
  Vec3<double> p{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) == (comma == std::string::npos))
      throw UsageError("--at expects three comma-separated coordinates, got '" + text + "'");
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      p[i] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad coordinate '" + item + "' in --at");
    }
    start = comma + 1;
  }
  return p;
}

void emit(const ReportDocument& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump();
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subflag: non-holonomic Codazzi curvature and holonomy flags"};
  app.require_subcommand(1);

  auto* report = app.add_subcommand("report", "run a group pipeline");
  std::string group = "heisenberg";
  ParameterFlags report_params;
  std::size_t points = 5;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> at;
  std::string derivative = "standard";
  std::string report_mode = "projection";
  bool report_json = false;
  report->add_option("--group", group, "heisenberg | su2 | cartan | general")->required();
  report_params.attach(*report, true);
  report->add_option("--points", points, "number of sampled chart points");
  report->add_option("--seed", seed, "sampling seed");
  report->add_option("--at", at, "explicit chart point x,y,z (repeatable)")->allow_extra_args(false);
  report->add_option("--derivative", derivative, "standard | lie");
  report->add_option("--mode", report_mode, "flag mode: projection | intersection");
  report->add_flag("--json", report_json, "emit JSON");

  auto* flag = app.add_subcommand("flag", "holonomy flag of a general connection");
  ParameterFlags flag_params;
  std::string flag_mode = "projection";
  bool flag_json = false;
  flag_params.attach(*flag, false);
  flag->add_option("--mode", flag_mode, "projection | intersection");
  flag->add_flag("--json", flag_json, "emit JSON");

  auto* sweep = app.add_subcommand("sweep", "flag dimensions over a parameter grid");
  std::string grid = "-1,0,1";
  std::string sweep_mode = "projection";
  bool sweep_json = false;
  sweep->add_option("--grid", grid, "'v1,v2,..' for all parameters or 'chi=..;kappa=..;alpha=..;beta=..'");
  sweep->add_option("--mode", sweep_mode, "projection | intersection");
  sweep->add_flag("--json", sweep_json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "run the acceptance self-check");
  std::vector<std::string> only;
  bool verify_json = false;
  verify->add_option("--only", only, "criterion names to run");
  verify->add_flag("--json", verify_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*report || *flag) {
      ReportRequest req;
      bool as_json = false;
      if (*report) {
        req.command = "report";
        req.group = parse_group(group);
        report_params.apply(req);
        req.point_count = points;
        req.seed = seed;
        for (const auto& p : at) req.points.push_back(parse_point(p));
        req.derivative = parse_derivative_mode(derivative);
        req.flag_mode = parse_flag_mode(report_mode);
        as_json = report_json;
      } else {
        req.command = "flag";
        req.group = GroupKind::general;
        flag_params.apply(req);
        req.flag_mode = parse_flag_mode(flag_mode);
        as_json = flag_json;
      }
      const auto doc = run_report(req);
      emit(doc, as_json, as_json ? std::string() : render_text(doc));
      return 0;
    }
    if (*sweep) {
      const auto mode = parse_flag_mode(sweep_mode);
      const auto g = parse_grid(grid);
      const auto rows = run_sweep(g, mode);
      if (sweep_json)
        std::cout << sweep_document(grid, g, mode, rows).dump();
      else
        std::cout << render_sweep_text(rows, mode);
      return 0;
    }
    VerifyOptions options;
    options.only = only;
    const auto summary = run_verify(options);
    if (verify_json)
      std::cout << summary.to_json().dump(2) << "\n";
    else
      std::cout << summary.render_text();
    return summary.all_passed() ? 0 : kExitFailure;
  } catch (const UsageError& e) {
    std::cerr << "subflag: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "subflag: " << e.what() << "\n";
    return kExitFailure;
  }
}
