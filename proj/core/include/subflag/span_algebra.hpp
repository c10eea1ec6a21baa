#pragma once

// Rank, independent subsets and intersections of spans of 3-vectors.
// Rational inputs are handled exactly; doubles go through an SVD with a
// relative threshold.

#include <cstddef>
#include <vector>

#include "subflag/linalg.hpp"
#include "subflag/scalar.hpp"

namespace subflag {

/// Singular values below kRankTolerance * max(sigma_max, 1) count as zero.
inline constexpr double kRankTolerance = 1e-10;

std::size_t rank_of(const std::vector<Vec3<Rational>>& vectors);
std::size_t rank_of(const std::vector<Vec3<double>>& vectors, double rel_tol = kRankTolerance);

/// Basis of span(a) ∩ span(b).
std::vector<Vec3<Rational>> intersect_spans(const std::vector<Vec3<Rational>>& a,
                                            const std::vector<Vec3<Rational>>& b);
std::vector<Vec3<double>> intersect_spans(const std::vector<Vec3<double>>& a,
                                          const std::vector<Vec3<double>>& b,
                                          double rel_tol = kRankTolerance);

/// Greedy independent subset, preserving input order.
template <typename S>
std::vector<Vec3<S>> independent_subset(const std::vector<Vec3<S>>& vectors) {
  std::vector<Vec3<S>> kept;
  for (const auto& v : vectors) {
    kept.push_back(v);
    if (rank_of(kept) < kept.size()) kept.pop_back();
  }
  return kept;
}

/// True when v is (numerically) the zero vector.
inline bool negligible(const Vec3<Rational>& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
inline bool negligible(const Vec3<double>& v) { return rank_of(std::vector<Vec3<double>>{v}) == 0; }

}  // namespace subflag
