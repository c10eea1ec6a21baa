#pragma once

// Report documents behind the `subflag` command line: the per-group
// pipelines, parameter sweeps, and their JSON/text renderings.
//
// Every JSON document has the top-level fields
//   schema_version (currently 1), request, results, residuals.
// Matrices are objects {"rows", "cols", "data"} with data row-major.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subflag/codazzi.hpp"
#include "subflag/holonomy_flag.hpp"
#include "subflag/liealg_connection.hpp"
#include "subflag/sampling.hpp"

namespace subflag {

enum class GroupKind { heisenberg, su2, cartan, general };

std::string_view group_name(GroupKind group);
GroupKind parse_group(std::string_view name);

struct ReportRequest {
  /// "report" runs the group pipeline; "flag" only the flag of a general table.
  std::string command = "report";
  GroupKind group = GroupKind::heisenberg;
  std::optional<Rational> rho;
  std::optional<ConnectionParameters<Rational>> params;
  /// Explicit chart coordinates; when empty, `point_count` points are sampled.
  std::vector<Vec3<double>> points;
  std::size_t point_count = 5;
  std::uint64_t seed = kDefaultSeed;
  DerivativeMode derivative = DerivativeMode::standard;
  FlagMode flag_mode = FlagMode::projection;

  /// Throws UsageError when the parameters do not match the group.
  void validate() const;
};

nlohmann::json to_json(const ReportRequest& request);

struct ReportDocument {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  nlohmann::json request = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json residuals = nlohmann::json::object();

  nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);
  /// Pretty-printed JSON followed by a newline.
  std::string dump() const;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument run_report(const ReportRequest& request);

std::string render_text(const ReportDocument& doc);

// ---------------------------------------------------------------------------
// sweeps

struct SweepGrid {
  std::vector<Rational> chi;
  std::vector<Rational> kappa;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  std::size_t size() const { return chi.size() * kappa.size() * alpha.size() * beta.size(); }
};

/// Grid syntax:
///   ""                          empty grid
///   "-1,0,1"                    the same values for chi, kappa, alpha, beta
///   "chi=-1,1;kappa=0,2;beta=1/2"  per-parameter lists; omitted ones are {0}
/// Values are exact: integers, p/q, or finite decimals.
SweepGrid parse_grid(std::string_view spec);

struct SweepRow {
  ConnectionParameters<Rational> params;
  std::size_t dim_r0 = 0;
  std::size_t dim_r1 = 0;
  /// Any of "chi=kappa", "chi=-kappa", "alpha=beta=0", "all-zero".
  std::vector<std::string> labels;
};

/// One row per tuple, ordered by (chi, kappa, alpha, beta) in grid order.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, FlagMode mode);

ReportDocument sweep_document(std::string_view grid_spec, const SweepGrid& grid, FlagMode mode,
                              const std::vector<SweepRow>& rows);

std::string render_sweep_text(const std::vector<SweepRow>& rows, FlagMode mode);

// ---------------------------------------------------------------------------
// JSON helpers shared with the verification report

nlohmann::json matrix_json(const Mat3<double>& m);
nlohmann::json matrix_json(const Mat3<Rational>& m);
nlohmann::json element_json(const AlgebraElement<Rational>& e);

}  // namespace subflag
