#include "subflag/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace subflag {

using nlohmann::json;

std::string_view group_name(GroupKind group) {
  switch (group) {
    case GroupKind::heisenberg:
      return "heisenberg";
    case GroupKind::su2:
      return "su2";
    case GroupKind::cartan:
      return "cartan";
    case GroupKind::general:
      return "general";
  }
  return "unknown";
}

GroupKind parse_group(std::string_view name) {
  if (name == "heisenberg") return GroupKind::heisenberg;
  if (name == "su2") return GroupKind::su2;
  if (name == "cartan") return GroupKind::cartan;
  if (name == "general") return GroupKind::general;
  throw UsageError("unknown group '" + std::string(name) +
                   "' (expected heisenberg|su2|cartan|general)");
}

void ReportRequest::validate() const {
  if (command != "report" && command != "flag")
    throw UsageError("unknown report command '" + command + "'");
  if (command == "flag" && (group != GroupKind::general || !params))
    throw UsageError("flag requires --chi, --kappa, --alpha and --beta");
  switch (group) {
    case GroupKind::heisenberg:
    case GroupKind::su2:
      if (rho || params)
        throw UsageError("group " + std::string(group_name(group)) + " takes no parameters");
      if (points.empty() && point_count == 0) throw UsageError("--points must be positive");
      break;
    case GroupKind::cartan:
      if (!rho) throw UsageError("group cartan requires --rho");
      if (params) throw UsageError("group cartan takes only --rho");
      break;
    case GroupKind::general:
      if (!params) throw UsageError("group general requires --chi, --kappa, --alpha and --beta");
      if (rho) throw UsageError("group general does not take --rho");
      break;
  }
}

json to_json(const ReportRequest& r) {
  json j;
  j["command"] = r.command;
  j["group"] = group_name(r.group);
  if (r.rho) j["rho"] = to_string(*r.rho);
  if (r.params) {
    j["chi"] = to_string(r.params->chi);
    j["kappa"] = to_string(r.params->kappa);
    j["alpha"] = to_string(r.params->alpha);
    j["beta"] = to_string(r.params->beta);
  }
  if (r.group == GroupKind::heisenberg || r.group == GroupKind::su2) {
    if (r.points.empty()) {
      j["points"] = r.point_count;
      j["seed"] = r.seed;
    } else {
      j["points"] = r.points;
    }
    j["derivative_mode"] = mode_name(r.derivative);
  }
  if (r.group == GroupKind::general) j["flag_mode"] = flag_mode_name(r.flag_mode);
  return j;
}

json ReportDocument::to_json() const {
  return json{{"schema_version", schema_version},
              {"request", request},
              {"results", results},
              {"residuals", residuals}};
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion)
    throw UsageError("unsupported schema_version " + std::to_string(doc.schema_version));
  doc.request = j.at("request");
  doc.results = j.at("results");
  doc.residuals = j.at("residuals");
  return doc;
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

json matrix_json(const Mat3<double>& m) {
  json data = json::array();
  for (const auto& row : m)
    for (double x : row) data.push_back(x);
  return {{"rows", 3}, {"cols", 3}, {"data", data}};
}

json matrix_json(const Mat3<Rational>& m) {
  Mat3<double> d;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d[i][j] = to_double(m[i][j]);
  return matrix_json(d);
}

json element_json(const AlgebraElement<Rational>& e) {
  return json::array({to_double(e[0]), to_double(e[1]), to_double(e[2])});
}

namespace {

template <std::size_t R, std::size_t C>
json dense_json(const std::array<std::array<double, C>, R>& m) {
  json data = json::array();
  for (const auto& row : m)
    for (double x : row) data.push_back(x);
  return {{"rows", R}, {"cols", C}, {"data", data}};
}

double abs_max(const AlgebraElement<Rational>& e) {
  return std::max({std::fabs(to_double(e[0])), std::fabs(to_double(e[1])), std::fabs(to_double(e[2]))});
}

Mat3<double> expected_chart_curvature(GroupKind group) {
  Mat3<double> r = zero_mat3<double>();
  if (group == GroupKind::su2) {
    r[0][1] = -4.0;
    r[1][0] = 4.0;
  }
  return r;
}

json decomposition_json(const FrameDecomposition<double>& dec) {
  json gamma = json::array();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) gamma.push_back(dec.gamma[i][j][k]);
  std::array<std::array<double, 2>, 2> b = dec.b;
  std::array<std::array<double, 3>, 2> w{dec.weingarten[0], dec.weingarten[1]};
  return {{"gamma", {{"dims", {2, 2, 2}}, {"layout", "gamma[i][j][k] = G^k_ij"}, {"data", gamma}}},
          {"b", dense_json(b)},
          {"weingarten", dense_json(w)},
          {"mode", mode_name(dec.mode)}};
}

// max over i, j of |D_{e_i} e_j - (c_X X + c_Y Y + c_Z Z)| at p
double reconstruction_residual(const ModelFrame& frame, const ChartPoint& p, DerivativeMode mode,
                               const FrameDecomposition<double>& dec) {
  const Vec3<double> x = frame.X.at(p.coords), y = frame.Y.at(p.coords), z = frame.Z.at(p.coords);
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (mode == DerivativeMode::lie && i == j) continue;
      const Vec3<double> d = mode == DerivativeMode::standard
                                 ? standard_derivative(frame[i], frame[j], p.coords)
                                 : bracket_at(frame[i], frame[j], p.coords);
      const Vec3<double> c = j < 2 ? Vec3<double>{dec.gamma[i][j][0], dec.gamma[i][j][1], dec.b[i][j]}
                                   : dec.weingarten[i];
      const Vec3<double> rebuilt = scale(c[0], x) + scale(c[1], y) + scale(c[2], z);
      worst = std::max(worst, max_abs(d - rebuilt));
    }
  return worst;
}

void chart_pipeline(const ReportRequest& req, ReportDocument& doc) {
  const ChartId chart = req.group == GroupKind::heisenberg ? ChartId::heisenberg : ChartId::su2;
  const ModelFrame frame = model_frame(chart);
  std::vector<ChartPoint> points;
  if (req.points.empty()) {
    Sampler sampler(req.seed);
    for (std::size_t i = 0; i < req.point_count; ++i) points.push_back(sampler.point(chart));
  } else {
    for (const auto& c : req.points) points.push_back({chart, c});
  }
  const Mat3<double> expected = expected_chart_curvature(req.group);

  json per_point = json::array();
  json residual_rows = json::array();
  double worst_curvature = 0.0;
  std::size_t failures = 0;
  for (const ChartPoint& p : points) {
    json entry{{"coords", p.coords}};
    try {
      const auto dec = derivation_equations(frame, p, req.derivative);
      const auto a = assemble_A_matrices(dec);
      const Mat3<double> r = codazzi_curvature(frame, p, req.derivative);
      const Vec3<double> xy = decompose_in_frame(lie_bracket(frame.X, frame.Y, p), frame, p);
      entry["decomposition"] = decomposition_json(dec);
      entry["A1"] = matrix_json(a.A1);
      entry["A2"] = matrix_json(a.A2);
      entry["curvature"] = matrix_json(r);
      const double deviation = max_abs(r - expected);
      worst_curvature = std::max(worst_curvature, deviation);
      residual_rows.push_back({{"coords", p.coords},
                               {"reconstruction", reconstruction_residual(frame, p, req.derivative, dec)},
                               {"b12_minus_b21", dec.b[0][1] - dec.b[1][0]},
                               {"bracket_z_coefficient", xy[2]},
                               {"curvature_deviation", deviation}});
    } catch (const SingularPointError& e) {
      entry["error"] = e.what();
      ++failures;
    } catch (const SingularMatrixError& e) {
      entry["error"] = e.what();
      ++failures;
    }
    per_point.push_back(std::move(entry));
  }
  doc.results["chart"] = chart_name(chart);
  doc.results["points"] = std::move(per_point);
  doc.results["expected_curvature"] = matrix_json(expected);
  doc.results["failed_points"] = failures;
  doc.residuals["points"] = std::move(residual_rows);
  doc.residuals["max_curvature_deviation"] = worst_curvature;

  if (req.group == GroupKind::heisenberg) {
    // The Heisenberg frame already has [X,Y] = Z, i.e. chi = kappa = 0.
    const auto flag = flag_spaces(make_connection(Rational(0), Rational(0), Rational(0), Rational(0)),
                                  req.flag_mode);
    doc.results["flag"] = {{"mode", flag_mode_name(flag.mode)},
                           {"dims", {flag.dim_r0, flag.dim_r1}},
                           {"r0_span", json::array()},
                           {"r1_span", json::array()}};
  }
}

json structure_json(const StructureConstants<Rational>& sc) {
  return {{"XY", element_json(sc(Basis::X, Basis::Y))},
          {"YZ", element_json(sc(Basis::Y, Basis::Z))},
          {"XZ", element_json(sc(Basis::X, Basis::Z))}};
}

json filtration_json(const Filtration<Rational>& f) {
  json layers = json::array();
  for (const auto& layer : f.layers) {
    json l = json::array();
    for (const auto& e : layer) l.push_back(element_json(e));
    layers.push_back(std::move(l));
  }
  json j{{"layers", layers}, {"bracket_generating", f.bracket_generating()}};
  j["steps"] = f.steps ? json(*f.steps) : json(nullptr);
  return j;
}

json flag_json(const HolonomyFlag<Rational>& flag) {
  json r0 = json::array(), r1 = json::array();
  for (const auto& e : flag.r0_span) r0.push_back(element_json(e));
  for (const auto& e : flag.r1_span) r1.push_back(element_json(e));
  return {{"mode", flag_mode_name(flag.mode)},
          {"pair", {"X", "Y"}},
          {"r0_span", r0},
          {"r1_span", r1},
          {"dims", {flag.dim_r0, flag.dim_r1}}};
}

void algebraic_codazzi(const StructureConstants<Rational>& sc, ReportDocument& doc) {
  const auto dec = derivation_equations(sc);
  const auto a = assemble_A_matrices(dec);
  doc.results["structure"] = structure_json(sc);
  doc.results["A1"] = matrix_json(a.A1);
  doc.results["A2"] = matrix_json(a.A2);
  doc.results["curvature"] = matrix_json(codazzi_curvature(sc));
  doc.results["filtration"] = filtration_json(horizontal_filtration(sc));
}

void general_pipeline(const ReportRequest& req, ReportDocument& doc, bool flag_only) {
  using E = AlgebraElement<Rational>;
  const auto& p = *req.params;
  const auto ct = make_connection(p.chi, p.kappa, p.alpha, p.beta);
  const auto flag = flag_spaces(ct, req.flag_mode);
  doc.results["flag"] = flag_json(flag);

  const Rational quarter = Rational(1) / 4, three_halves = Rational(3) / 2, half = Rational(1) / 2;
  const std::array<E, 3> closed{
      ((p.chi - p.kappa) * quarter) * E::Y() - (three_halves * p.alpha) * E::Z(),
      ((p.chi + p.kappa) * quarter) * E::X() - (three_halves * p.beta) * E::Z(),
      (-(p.alpha * half) * (p.chi + p.kappa)) * E::X() + ((p.beta * half) * (p.chi - p.kappa)) * E::Y()};
  const std::array<E, 3> basis{E::X(), E::Y(), E::Z()};
  json curv;
  double closed_form_residual = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const E r = curvature(ct, E::X(), E::Y(), basis[i]);
    curv[std::string(1, "XYZ"[i])] = element_json(r);
    closed_form_residual = std::max(closed_form_residual, abs_max(r - closed[i]));
  }
  doc.results["curvature_xy"] = curv;
  doc.residuals["curvature_closed_form"] = closed_form_residual;
  if (flag_only) return;

  algebraic_codazzi(ct.structure, doc);
  json table;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      table[std::string{"XYZ"[a]} + std::string{"XYZ"[b]}] = element_json(ct.table[a][b]);
  doc.results["connection"] = table;

  double torsion_max = 0.0, parallel_max = 0.0;
  for (const auto& a : basis)
    for (const auto& b : basis) torsion_max = std::max(torsion_max, abs_max(torsion(ct, a, b)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        parallel_max = std::max(
            parallel_max, std::fabs(to_double(metric_parallel_defect(ct, basis[a], basis[b], basis[c]))));
  const std::array<Rational, 5> grid{-2, -1, 0, 1, 2};
  const auto obstruction = metric_obstruction(p.chi, p.kappa, p.alpha, p.beta, std::span<const Rational>(grid));
  doc.results["connection_checks"] = {{"u_xy_z_slot", to_double(obstruction.u_xy_z_slot)},
                          {"z_slot_metric_independent", obstruction.z_slot_metric_independent},
                          {"u_xy_admits_metric", obstruction.u_xy_admits_metric},
                          {"candidates_checked", obstruction.samples.size()}};
  doc.residuals["torsion_max"] = torsion_max;
  doc.residuals["parallel_defect_max"] = parallel_max;
}

// ---------------------------------------------------------------------------
// text rendering

// Values below 1e-12 print as 0 unless `snap` is off (residual columns).
std::string fmt_num(double x, bool snap = true) {
  if (x == 0.0 || (snap && std::fabs(x) < 1e-12)) x = 0.0;  // also drops the sign of -0
  std::ostringstream os;
  os << std::setprecision(snap ? 8 : 3) << x;
  return os.str();
}

void render_matrix(std::ostringstream& os, const std::string& title, const json& m) {
  os << title << ":\n";
  const auto rows = m.at("rows").get<std::size_t>();
  const auto cols = m.at("cols").get<std::size_t>();
  const auto& data = m.at("data");
  for (std::size_t i = 0; i < rows; ++i) {
    os << " ";
    for (std::size_t j = 0; j < cols; ++j) os << " " << std::setw(15) << fmt_num(data[i * cols + j].get<double>());
    os << "\n";
  }
}

void render_vectors(std::ostringstream& os, const std::string& title, const json& vs) {
  os << title << ":";
  if (vs.empty()) os << " (empty)";
  os << "\n";
  for (const auto& v : vs)
    os << "  (" << fmt_num(v[0].get<double>()) << ", " << fmt_num(v[1].get<double>()) << ", "
       << fmt_num(v[2].get<double>()) << ")\n";
}

}  // namespace

ReportDocument run_report(const ReportRequest& req) {
  req.validate();
  ReportDocument doc;
  doc.request = to_json(req);
  if (req.command == "flag") {
    general_pipeline(req, doc, true);
    return doc;
  }
  switch (req.group) {
    case GroupKind::heisenberg:
    case GroupKind::su2:
      chart_pipeline(req, doc);
      break;
    case GroupKind::cartan:
      algebraic_codazzi(cartan_structure(*req.rho), doc);
      break;
    case GroupKind::general:
      general_pipeline(req, doc, false);
      break;
  }
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  const auto& req = doc.request;
  os << "subflag " << req.at("command").get<std::string>() << "  group=" << req.at("group").get<std::string>();
  for (const char* key : {"rho", "chi", "kappa", "alpha", "beta"})
    if (req.contains(key)) os << "  " << key << "=" << req.at(key).get<std::string>();
  os << "\n\n";
  const auto& res = doc.results;

  if (res.contains("points")) {
    os << std::left << std::setw(44) << "point" << std::right << std::setw(14) << "b12-b21"
       << std::setw(14) << "R[0][1]" << std::setw(14) << "R[1][0]" << std::setw(14) << "|R-R0|max" << "\n";
    std::size_t k = 0;
    for (const auto& pt : res.at("points")) {
      std::ostringstream coords;
      coords << "(" << fmt_num(pt.at("coords")[0].get<double>()) << ", "
             << fmt_num(pt.at("coords")[1].get<double>()) << ", "
             << fmt_num(pt.at("coords")[2].get<double>()) << ")";
      os << std::left << std::setw(44) << coords.str() << std::right;
      if (pt.contains("error")) {
        os << "  error: " << pt.at("error").get<std::string>() << "\n";
        continue;
      }
      const auto& row = doc.residuals.at("points")[k++];
      const auto& r = pt.at("curvature").at("data");
      os << std::setw(14) << fmt_num(row.at("b12_minus_b21").get<double>()) << std::setw(14)
         << fmt_num(r[1].get<double>()) << std::setw(14) << fmt_num(r[3].get<double>()) << std::setw(14)
         << fmt_num(row.at("curvature_deviation").get<double>(), false) << "\n";
    }
    os << "\n";
    for (const auto& pt : res.at("points")) {
      if (pt.contains("error")) continue;
      render_matrix(os, "A1 (first point)", pt.at("A1"));
      render_matrix(os, "A2 (first point)", pt.at("A2"));
      render_matrix(os, "R (first point)", pt.at("curvature"));
      break;
    }
  } else {
    if (res.contains("A1")) render_matrix(os, "A1", res.at("A1"));
    if (res.contains("A2")) render_matrix(os, "A2", res.at("A2"));
    if (res.contains("curvature")) render_matrix(os, "R = [A1, A2]", res.at("curvature"));
    if (res.contains("filtration")) {
      const auto& f = res.at("filtration");
      os << "filtration steps: " << (f.at("steps").is_null() ? std::string("not bracket generating")
                                                            : std::to_string(f.at("steps").get<int>()))
         << "\n";
    }
    if (res.contains("curvature_xy")) {
      for (const char* key : {"X", "Y", "Z"}) {
        const auto& v = res.at("curvature_xy").at(key);
        os << "R(X,Y)" << key << " = (" << fmt_num(v[0].get<double>()) << ", " << fmt_num(v[1].get<double>())
           << ", " << fmt_num(v[2].get<double>()) << ")\n";
      }
    }
    if (res.contains("connection_checks")) {
      const auto& l = res.at("connection_checks");
      os << "torsion max: " << fmt_num(doc.residuals.at("torsion_max").get<double>())
         << "   horizontal parallel defect max: " << fmt_num(doc.residuals.at("parallel_defect_max").get<double>())
         << "\n"
         << "metric obstruction: <U(X,Y),Z> residual = " << fmt_num(l.at("u_xy_z_slot").get<double>())
         << (l.at("u_xy_admits_metric").get<bool>() ? "  (a metric exists)" : "  (no metric)") << "\n";
    }
  }
  if (res.contains("flag")) {
    const auto& f = res.at("flag");
    os << "\nholonomy flag (" << f.at("mode").get<std::string>() << "): dim R0 = " << f.at("dims")[0]
       << ", dim R1 = " << f.at("dims")[1] << "\n";
    render_vectors(os, "R0 span", f.at("r0_span"));
    render_vectors(os, "R1 span", f.at("r1_span"));
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// sweeps

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_values(std::string_view list) {
  std::vector<Rational> out;
  for (const auto& item : split(list, ',')) {
    const auto t = trim(item);
    if (t.empty()) throw UsageError("empty value in grid list '" + std::string(list) + "'");
    out.push_back(parse_rational(t));
  }
  return out;
}

}  // namespace

SweepGrid parse_grid(std::string_view spec) {
  SweepGrid grid;
  if (trim(std::string(spec)).empty()) return grid;
  if (spec.find('=') == std::string_view::npos) {
    const auto values = parse_values(spec);
    grid.chi = grid.kappa = grid.alpha = grid.beta = values;
    return grid;
  }
  const std::vector<Rational> zero{Rational(0)};
  grid.chi = grid.kappa = grid.alpha = grid.beta = zero;
  for (const auto& part : split(spec, ';')) {
    const auto t = trim(part);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("grid entry '" + t + "' is not name=values");
    const auto name = trim(t.substr(0, eq));
    auto values = parse_values(t.substr(eq + 1));
    if (name == "chi") grid.chi = std::move(values);
    else if (name == "kappa") grid.kappa = std::move(values);
    else if (name == "alpha") grid.alpha = std::move(values);
    else if (name == "beta") grid.beta = std::move(values);
    else throw UsageError("unknown grid parameter '" + name + "' (expected chi|kappa|alpha|beta)");
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, FlagMode mode) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& chi : grid.chi)
    for (const auto& kappa : grid.kappa)
      for (const auto& alpha : grid.alpha)
        for (const auto& beta : grid.beta) {
          SweepRow row;
          row.params = {chi, kappa, alpha, beta};
          std::tie(row.dim_r0, row.dim_r1) = flag_dimensions(chi, kappa, alpha, beta, mode);
          const bool ab_zero = alpha == 0 && beta == 0;
          if (chi == kappa) row.labels.emplace_back("chi=kappa");
          if (chi == -kappa) row.labels.emplace_back("chi=-kappa");
          if (ab_zero) row.labels.emplace_back("alpha=beta=0");
          if (ab_zero && chi == 0 && kappa == 0) row.labels.emplace_back("all-zero");
          rows.push_back(std::move(row));
        }
  return rows;
}

ReportDocument sweep_document(std::string_view grid_spec, const SweepGrid& grid, FlagMode mode,
                              const std::vector<SweepRow>& rows) {
  ReportDocument doc;
  doc.request = {{"command", "sweep"}, {"grid", std::string(grid_spec)}, {"flag_mode", flag_mode_name(mode)},
                 {"tuples", grid.size()}};
  json table = json::array();
  for (const auto& r : rows)
    table.push_back({{"chi", to_string(r.params.chi)},
                     {"kappa", to_string(r.params.kappa)},
                     {"alpha", to_string(r.params.alpha)},
                     {"beta", to_string(r.params.beta)},
                     {"dims", {r.dim_r0, r.dim_r1}},
                     {"labels", r.labels}});
  doc.results["rows"] = std::move(table);
  return doc;
}

std::string render_sweep_text(const std::vector<SweepRow>& rows, FlagMode mode) {
  std::ostringstream os;
  os << "subflag sweep  mode=" << flag_mode_name(mode) << "  rows=" << rows.size() << "\n";
  os << std::setw(8) << "chi" << std::setw(8) << "kappa" << std::setw(8) << "alpha" << std::setw(8) << "beta"
     << std::setw(7) << "dimR0" << std::setw(7) << "dimR1" << "  labels\n";
  for (const auto& r : rows) {
    os << std::setw(8) << to_string(r.params.chi) << std::setw(8) << to_string(r.params.kappa) << std::setw(8)
       << to_string(r.params.alpha) << std::setw(8) << to_string(r.params.beta) << std::setw(7) << r.dim_r0
       << std::setw(7) << r.dim_r1 << "  ";
    for (std::size_t i = 0; i < r.labels.size(); ++i) os << (i ? "," : "") << r.labels[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace subflag
