// Acceptance suite: one PASS/FAIL line per criterion.
// usage: subflag_acceptance <path-to-subflag-cli>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subflag/classical_surface.hpp"
#include "subflag/codazzi.hpp"
#include "subflag/holonomy_flag.hpp"
#include "subflag/liealg_connection.hpp"
#include "subflag/model_groups.hpp"
#include "subflag/sampling.hpp"

using namespace subflag;

namespace {

using E = AlgebraElement<Rational>;
using R = Rational;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

std::string cli_path;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::array<E, 3> kBasis{E::X(), E::Y(), E::Z()};

Outcome heisenberg_flatness() {
  const auto t0 = std::chrono::steady_clock::now();
  Sampler s(kDefaultSeed);
  const auto frame = heisenberg_frame();
  double worst = 0;
  for (int n = 0; n < 50; ++n)
    worst = std::max(worst, max_abs(codazzi_curvature(frame, s.point(ChartId::heisenberg), DerivativeMode::standard)));
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && t < 1.0, "max|R|=" + fmt(worst) + " (<=1e-12), " + fmt(t) + "s (<1s)"};
}

Outcome su2_constant_curvature() {
  const auto t0 = std::chrono::steady_clock::now();
  Sampler s(kDefaultSeed);
  const auto frame = su2_frame();
  const double want[3][3] = {{0, -4, 0}, {4, 0, 0}, {0, 0, 0}};
  std::vector<Mat3<double>> rs;
  double worst = 0;
  for (int n = 0; n < 50; ++n) {
    rs.push_back(codazzi_curvature(frame, s.point(ChartId::su2), DerivativeMode::standard));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::fabs(rs.back()[i][j] - want[i][j]));
  }
  double sd = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double mean = 0, var = 0;
      for (const auto& r : rs) mean += r[i][j] / rs.size();
      for (const auto& r : rs) var += (r[i][j] - mean) * (r[i][j] - mean);
      sd = std::max(sd, std::sqrt(var / (rs.size() - 1)));
    }
  const double t = seconds_since(t0);
  return {worst <= 1e-8 && sd < 1e-7 && t < 5.0,
          "max|R-R0|=" + fmt(worst) + " (<=1e-8), sd=" + fmt(sd) + " (<1e-7), " + fmt(t) + "s (<5s)"};
}

Outcome su2_coefficients() {
  Sampler s(kDefaultSeed);
  const auto frame = su2_frame();
  double worst = 0;
  for (int n = 0; n < 50; ++n) {
    const auto p = s.point(ChartId::su2);
    const auto dec = derivation_equations(frame, p, DerivativeMode::standard);
    const auto want = oracle::su2_closed_forms({p.coords[0], p.coords[1], p.coords[2]});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        worst = std::max(worst, std::fabs(dec.b[i][j] - want.b[i][j]));
        for (int k = 0; k < 2; ++k) worst = std::max(worst, std::fabs(dec.gamma[i][j][k] - want.gamma[i][j][k]));
      }
  }
  return {worst <= 1e-8, "max coefficient deviation=" + fmt(worst) + " (<=1e-8) at 50 points"};
}

Outcome cartan_curvature() {
  bool ok = true;
  for (int r : {-1, 0, 1, 2}) {
    const R rho(r);
    const auto got = codazzi_curvature(cartan_structure(rho));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const R want = (i == 0 && j == 1) ? -2 * rho : (i == 1 && j == 0) ? 2 * rho : R(0);
        ok = ok && got[i][j] == want;
      }
  }
  return {ok, "exact match for rho in {-1,0,1,2}"};
}

Outcome bracket_bookkeeping() {
  Sampler s(kDefaultSeed);
  double worst = 0;
  for (auto [chart, z] : {std::pair{ChartId::heisenberg, 1.0}, std::pair{ChartId::su2, 2.0}}) {
    const auto frame = model_frame(chart);
    for (int n = 0; n < 50; ++n) {
      const auto dec = derivation_equations(frame, s.point(chart), DerivativeMode::standard);
      worst = std::max(worst, std::fabs(dec.b[0][1] - dec.b[1][0] - z));
    }
  }
  return {worst <= 1e-9, "max|b12-b21-[X,Y]_Z|=" + fmt(worst) + " (<=1e-9)"};
}

ConnectionParameters<R> draw(Sampler& s) { return {s.rational(), s.rational(), s.rational(), s.rational()}; }

Outcome torsion_free() {
  Sampler s(101);
  std::size_t bad = 0;
  for (int n = 0; n < 200; ++n) {
    const auto p = draw(s);
    const auto ct = make_connection(p.chi, p.kappa, p.alpha, p.beta);
    for (const auto& a : kBasis)
      for (const auto& b : kBasis) bad += torsion(ct, a, b).is_zero() ? 0 : 1;
  }
  return {bad == 0, std::to_string(bad) + " nonzero of 1800 (200 tuples x 9 pairs)"};
}

Outcome horizontal_parallelism() {
  Sampler s(102);
  std::size_t bad = 0;
  for (int n = 0; n < 200; ++n) {
    const auto p = draw(s);
    const auto ct = make_connection(p.chi, p.kappa, p.alpha, p.beta);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) bad += metric_parallel_defect(ct, kBasis[a], kBasis[b], kBasis[c]) == 0 ? 0 : 1;
  }
  return {bad == 0, std::to_string(bad) + " nonzero of 1600 (200 tuples x 8 triples)"};
}

// Z-slot of 1/2 rhs - <U(X,Y), Z> computed straight from the bracket table and Gram matrix.
R z_slot(const R& chi, const R& kappa, const R& p, const R& q, const R& s) {
  const auto sc = general_structure(chi, kappa);
  const Mat3<R> g{{{1, 0, p}, {0, 1, q}, {p, q, s}}};
  auto inner = [&](const E& u, const E& v) {
    R out = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out += u[i] * g[i][j] * v[j];
    return out;
  };
  return (inner(bracket(sc, E::Z(), E::X()), E::Y()) + inner(E::X(), bracket(sc, E::Z(), E::Y()))) / 2;
}

Outcome metric_obstruction_criterion() {
  const std::array<R, 5> grid{R(-2), R(-1), R(0), R(1, 2), R(3)};
  Sampler s(103);
  std::size_t bad = 0, checked = 0;
  std::vector<ConnectionParameters<R>> tuples{{0, 0, 0, 0}, {0, 2, 1, 1}, {1, 0, 0, 0}};
  for (int n = 0; n < 10; ++n) tuples.push_back(draw(s));
  for (const auto& t : tuples) {
    const auto rep = metric_obstruction(t.chi, t.kappa, t.alpha, t.beta, std::span<const R>(grid));
    if (rep.samples.size() != 125) ++bad;
    for (const auto& smp : rep.samples) {
      const R want = -t.chi;
      const R oracle_val = z_slot(t.chi, t.kappa, smp.metric.xz(), smp.metric.yz(), smp.metric.zz());
      bad += (smp.u_xy_residual[2] == want && oracle_val == want) ? 0 : 1;
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " candidates over " + std::to_string(tuples.size()) +
                        " tuples, " + std::to_string(bad) + " mismatches"};
}

Outcome closed_form_curvature() {
  Sampler s(104);
  std::size_t bad = 0;
  for (int n = 0; n < 200; ++n) {
    const auto p = draw(s);
    const auto ct = make_connection(p.chi, p.kappa, p.alpha, p.beta);
    const std::array<E, 3> want{E::of(0, (p.chi - p.kappa) / 4, -R(3, 2) * p.alpha),
                                E::of((p.chi + p.kappa) / 4, 0, -R(3, 2) * p.beta),
                                E::of(-p.alpha / 2 * (p.chi + p.kappa), p.beta / 2 * (p.chi - p.kappa), 0)};
    for (int i = 0; i < 3; ++i) bad += curvature(ct, E::X(), E::Y(), kBasis[i]) == want[i] ? 0 : 1;
  }
  return {bad == 0, std::to_string(bad) + " mismatches of 600 coefficient triples"};
}

Outcome flag_vanishing() {
  const auto flat = flag_dimensions(R(0), R(0), R(0), R(0));
  const auto generic = flag_spaces(make_connection(R(1), R(3), R(1), R(2)));
  const auto img = oracle::curvature_images(1, 3, 1, 2);
  const std::size_t oracle_r1 = oracle::gauss_rank({img[0], img[1], img[2]});
  const bool ok = flat.first == 0 && flat.second == 0 && generic.dim_r1 == oracle_r1;
  return {ok, "flat (" + std::to_string(flat.first) + "," + std::to_string(flat.second) + "); (1,3,1,2) dim R1 " +
                  std::to_string(generic.dim_r1) + " vs oracle " + std::to_string(oracle_r1)};
}

Outcome classical_baseline() {
  oracle::Points pts(105);
  double cod = 0, k = 0;
  for (int n = 0; n < 20; ++n) {
    cod = std::max(cod, max_abs(codazzi_residual(unit_sphere(), {pts.u(0.2, 2.9), pts.u(0, 6.28)})));
    cod = std::max(cod, max_abs(codazzi_residual(torus(2, 1), {pts.u(0, 6.28), pts.u(0, 6.28)})));
    k = std::max(k, std::fabs(surface_forms(unit_sphere(), {pts.u(0.2, 2.9), pts.u(0, 6.28)}).gaussian_curvature - 1));
  }
  const auto metric = MetricField::make([](const auto& u) {
    using T = std::decay_t<decltype(u[0])>;
    const T sn = sin(u[0]);
    return std::array<std::array<T, 2>, 2>{{{T(1.0), T(0.0)}, {T(0.0), sn * sn}}};
  });
  double g = 0;
  for (double u1 : {0.3, 0.7, 1.2, 2.0, 2.8}) g = std::max(g, std::fabs(christoffel_from_metric(metric, {u1, 0.4})[1][0][1] - std::cos(u1) / std::sin(u1)));
  return {cod <= 1e-6 && k <= 1e-8 && g <= 1e-8,
          "codazzi=" + fmt(cod) + " (<=1e-6), |K-1|=" + fmt(k) + " (<=1e-8), |G2_12-cot|=" + fmt(g) + " (<=1e-8)"};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  if (cli_path.empty()) return {false, "no CLI path given"};
  const std::string cmd = "\"" + cli_path + "\" report --group su2 --points 5 --seed 1 --json";
  int s1 = 0, s2 = 0;
  const auto a = capture(cmd, s1);
  const auto b = capture(cmd, s2);
  const bool ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  return {ok, std::to_string(a.size()) + " bytes, identical=" + (a == b ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::vector<Criterion> criteria{
      {"heisenberg_flatness", heisenberg_flatness},
      {"su2_constant_curvature", su2_constant_curvature},
      {"su2_coefficients", su2_coefficients},
      {"cartan_curvature", cartan_curvature},
      {"bracket_bookkeeping", bracket_bookkeeping},
      {"torsion_free", torsion_free},
      {"horizontal_parallelism", horizontal_parallelism},
      {"metric_obstruction", metric_obstruction_criterion},
      {"closed_form_curvature", closed_form_curvature},
      {"flag_vanishing", flag_vanishing},
      {"classical_baseline", classical_baseline},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2d %-24s %s\n", o.pass ? "PASS" : "FAIL", ++index, c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
