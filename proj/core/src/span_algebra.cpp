#include "subflag/span_algebra.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace subflag {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// 3 x n matrix with the vectors as columns.
RationalMatrix columns(const std::vector<Vec3<Rational>>& vs) {
  RationalMatrix m(3, std::vector<Rational>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = vs[j][i];
  return m;
}

Eigen::MatrixXd columns(const std::vector<Vec3<double>>& vs) {
  Eigen::MatrixXd m(3, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vs[j][i];
  return m;
}

double threshold(const Eigen::VectorXd& sigma, double rel_tol) {
  const double top = sigma.size() > 0 ? sigma(0) : 0.0;
  return rel_tol * std::max(top, 1.0);
}

}  // namespace

std::size_t rank_of(const std::vector<Vec3<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  auto m = columns(vectors);
  return rref(m).size();
}

std::size_t rank_of(const std::vector<Vec3<double>>& vectors, double rel_tol) {
  if (vectors.empty()) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns(vectors));
  const auto& sigma = svd.singularValues();
  const double cut = threshold(sigma, rel_tol);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cut) ++r;
  return r;
}

std::vector<Vec3<Rational>> intersect_spans(const std::vector<Vec3<Rational>>& a,
                                            const std::vector<Vec3<Rational>>& b) {
  if (a.empty() || b.empty()) return {};
  // Null space of [A | -B]; each null vector (x, y) gives A x in the intersection.
  std::vector<Vec3<Rational>> joined = a;
  for (const auto& v : b) joined.push_back({-v[0], -v[1], -v[2]});
  auto m = columns(joined);
  const auto pivots = rref(m);
  const std::size_t n = joined.size();
  std::vector<Vec3<Rational>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> x(n, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    Vec3<Rational> w{0, 0, 0};
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < 3; ++i) w[i] += x[j] * a[j][i];
    if (!negligible(w)) out.push_back(w);
  }
  return independent_subset(out);
}

std::vector<Vec3<double>> intersect_spans(const std::vector<Vec3<double>>& a,
                                          const std::vector<Vec3<double>>& b, double rel_tol) {
  if (a.empty() || b.empty()) return {};
  std::vector<Vec3<double>> joined = a;
  for (const auto& v : b) joined.push_back({-v[0], -v[1], -v[2]});
  const Eigen::MatrixXd m = columns(joined);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cut = threshold(sigma, rel_tol);
  const Eigen::MatrixXd& v = svd.matrixV();
  const Eigen::MatrixXd a_cols = columns(a);
  std::vector<Vec3<double>> out;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (k < sigma.size() && sigma(k) > cut) continue;
    const Eigen::Vector3d w = a_cols * v.col(k).head(static_cast<Eigen::Index>(a.size()));
    const Vec3<double> wv{w(0), w(1), w(2)};
    if (!negligible(wv)) out.push_back(wv);
  }
  return independent_subset(out);
}

}  // namespace subflag
