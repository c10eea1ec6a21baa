#pragma once

// Concrete frames on the Heisenberg group and SU(2), and the abstract
// bracket tables used by the algebraic layer.
//
// Two bracket normalizations coexist and are never converted into each
// other here:
//   cartan_structure(rho):        [X,Y] = 2Z, [Y,Z] = rho X, [X,Z] = -rho Y
//   general_structure(chi, kappa): [X,Y] = Z,  [Y,Z] = (chi+kappa) X, [X,Z] = (chi-kappa) Y
//
// rho is any real. The customary values are 0 and +-1, but the SU(2) frame
// below realizes rho = 2.

#include <cmath>
#include <string>

#include "subflag/algebra.hpp"
#include "subflag/chart_fields.hpp"

namespace subflag {

struct ModelFrame {
  std::string name;
  ChartId chart;
  VectorField X;
  VectorField Y;
  VectorField Z;

  const VectorField& operator[](std::size_t i) const {
    switch (i) {
      case 0:
        return X;
      case 1:
        return Y;
      default:
        return Z;
    }
  }
};

/// X = d_x - (y/2) d_z, Y = d_y + (x/2) d_z, Z = d_z.
ModelFrame heisenberg_frame();

/// X = kq, Y = jq, Z = iq on the unit quaternions, in (d_phi, d_theta, d_psi)
/// components of the chart q = (cos t cos(psi+phi), cos t sin(psi+phi),
/// sin t cos(psi-phi), sin t sin(psi-phi)), t = theta.
ModelFrame su2_frame();

ModelFrame model_frame(ChartId chart);

template <typename S>
StructureConstants<S> cartan_structure(const S& rho) {
  using E = AlgebraElement<S>;
  return StructureConstants<S>::from_brackets("cartan", S(2) * E::Z(), rho * E::X(), -rho * E::Y());
}

template <typename S>
StructureConstants<S> general_structure(const S& chi, const S& kappa) {
  using E = AlgebraElement<S>;
  return StructureConstants<S>::from_brackets("general", E::Z(), (chi + kappa) * E::X(),
                                              (chi - kappa) * E::Y());
}

}  // namespace subflag
