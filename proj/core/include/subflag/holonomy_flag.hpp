#pragma once

// Horizontal filtration H^0 ⊂ H^1 ⊂ ... and the holonomy flag R^0 ⊂ R^1
// generated by the curvature operator R(X,Y) of a left-invariant connection.
//
// Two constructions of R^i are provided:
//   projection:   R^0 = span of the H^0-projections of R(X,Y)X, R(X,Y)Y;
//                 R^1 = span{R(X,Y)v : v in H^1}.
//   intersection: R^i = span{R(X,Y)v : v in H^i} ∩ H^i.
// They agree when alpha = beta = 0 and differ otherwise; projection is the
// default. Only intersection mode guarantees R^0 ⊆ R^1.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "subflag/algebra.hpp"
#include "subflag/liealg_connection.hpp"
#include "subflag/span_algebra.hpp"

namespace subflag {

enum class FlagMode { projection, intersection };

std::string_view flag_mode_name(FlagMode mode);
FlagMode parse_flag_mode(std::string_view name);

template <typename S>
struct Filtration {
  /// layers[i] is an independent spanning set of H^i; layers[0] = {X, Y}.
  std::vector<std::vector<AlgebraElement<S>>> layers;
  /// Smallest k with H^k the whole algebra, if the distribution is bracket generating.
  std::optional<std::size_t> steps;

  bool bracket_generating() const { return steps.has_value(); }
};

template <typename S>
struct HolonomyFlag {
  FlagMode mode = FlagMode::projection;
  /// The horizontal pair (a, b) whose curvature operator R(a,b) generates the flag.
  std::pair<Basis, Basis> pair{Basis::X, Basis::Y};
  /// Nonzero spanning vectors; may be linearly dependent.
  std::vector<AlgebraElement<S>> r0_span;
  std::vector<AlgebraElement<S>> r1_span;
  std::size_t dim_r0 = 0;
  std::size_t dim_r1 = 0;
};

namespace detail {

template <typename S>
std::vector<Vec3<S>> as_vectors(const std::vector<AlgebraElement<S>>& es) {
  std::vector<Vec3<S>> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(e.coeffs);
  return out;
}

template <typename S>
std::vector<AlgebraElement<S>> as_elements(const std::vector<Vec3<S>>& vs) {
  std::vector<AlgebraElement<S>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back({v});
  return out;
}

template <typename S>
std::vector<AlgebraElement<S>> drop_negligible(std::vector<AlgebraElement<S>> es) {
  std::erase_if(es, [](const AlgebraElement<S>& e) { return negligible(e.coeffs); });
  return es;
}

template <typename S>
std::size_t span_rank(const std::vector<AlgebraElement<S>>& es) {
  return rank_of(as_vectors(es));
}

}  // namespace detail

/// H^0 = span{X, Y}; H^i = [H^0, H^{i-1}] + H^{i-1} until the algebra is
/// reached or the span stops growing.
template <typename S>
Filtration<S> horizontal_filtration(const StructureConstants<S>& sc) {
  using E = AlgebraElement<S>;
  Filtration<S> f;
  const std::vector<E> h0{E::X(), E::Y()};
  f.layers.push_back(h0);
  if (detail::span_rank(h0) == 3) {
    f.steps = 0;
    return f;
  }
  for (std::size_t step = 1; step <= 3; ++step) {
    std::vector<E> next = f.layers.back();
    for (const auto& h : h0)
      for (const auto& v : f.layers.back()) next.push_back(bracket(sc, h, v));
    next = detail::as_elements(independent_subset(detail::as_vectors(next)));
    const bool grew = next.size() > f.layers.back().size();
    if (!grew) break;
    f.layers.push_back(std::move(next));
    if (f.layers.back().size() == 3) {
      f.steps = step;
      break;
    }
  }
  return f;
}

/// Flag generated by R(a,b) for a horizontal pair (a, b).
template <typename S>
HolonomyFlag<S> flag_for_pair(const ConnectionTable<S>& ct, Basis a, Basis b,
                              FlagMode mode = FlagMode::projection) {
  using E = AlgebraElement<S>;
  if (a == Basis::Z || b == Basis::Z)
    throw NonHorizontalError("holonomy flag pairs must be horizontal");
  const auto ea = E::basis(a);
  const auto eb = E::basis(b);
  auto r = [&](const E& v) { return curvature(ct, ea, eb, v); };

  const Filtration<S> filtration = horizontal_filtration(ct.structure);
  const std::vector<E>& h0 = filtration.layers.front();
  const std::vector<E>& h1 = filtration.layers.size() > 1 ? filtration.layers[1] : h0;

  std::vector<E> image0;
  for (const auto& v : h0) image0.push_back(r(v));
  std::vector<E> image1;
  for (const auto& v : h1) image1.push_back(r(v));

  HolonomyFlag<S> flag;
  flag.mode = mode;
  flag.pair = {a, b};
  if (mode == FlagMode::projection) {
    for (const auto& w : image0) flag.r0_span.push_back(E::of(w[0], w[1], S(0)));
    flag.r0_span = detail::drop_negligible(std::move(flag.r0_span));
    flag.r1_span = detail::drop_negligible(image1);
  } else {
    flag.r0_span = detail::as_elements(
        intersect_spans(detail::as_vectors(image0), detail::as_vectors(h0)));
    flag.r1_span = detail::as_elements(
        intersect_spans(detail::as_vectors(detail::drop_negligible(image1)), detail::as_vectors(h1)));
  }
  flag.dim_r0 = detail::span_rank(flag.r0_span);
  flag.dim_r1 = detail::span_rank(flag.r1_span);
  return flag;
}

/// The flag of the pair (X, Y).
template <typename S>
HolonomyFlag<S> flag_spaces(const ConnectionTable<S>& ct, FlagMode mode = FlagMode::projection) {
  return flag_for_pair(ct, Basis::X, Basis::Y, mode);
}

/// One flag per horizontal pair e_j, e_k with j < k. With dim H^0 = 2 this is
/// the single pair (X, Y).
template <typename S>
std::vector<HolonomyFlag<S>> holonomy_flag_collection(const ConnectionTable<S>& ct,
                                                      FlagMode mode = FlagMode::projection) {
  return {flag_for_pair(ct, Basis::X, Basis::Y, mode)};
}

template <typename S>
std::pair<std::size_t, std::size_t> flag_dimensions(const S& chi, const S& kappa, const S& alpha,
                                                    const S& beta,
                                                    FlagMode mode = FlagMode::projection) {
  const auto flag = flag_spaces(make_connection(chi, kappa, alpha, beta), mode);
  return {flag.dim_r0, flag.dim_r1};
}

}  // namespace subflag
