#pragma once

#include <complex>

#include "polariton2d/config.hpp"
#include "polariton2d/pathway_mask.hpp"

namespace polariton2d {

using cplx = std::complex<double>;

/// Couplings, rotating-frame detunings and coherence decay coefficients, all
/// in cm^-1. The coherence coefficients r enter as d rho/dt = -r rho + ...
struct DerivedRates {
  double g_ge = 0.0;          // collective g_ge sqrt(N) after conc_scale
  double g_collective = 0.0;  // unscaled input
  double g_ef = 0.0;
  double kappa = 0.0;  // after kappa_scale
  double delta_c = 0.0;
  double delta_ge = 0.0;
  double delta_ef = 0.0;
  double delta_mech = 0.0;
  double beta = 0.0;
  cplx r_eg{};
  cplx r_fe{};
  cplx r_fg{};
  /// Cavity coefficient kappa/2 - i delta_c.
  cplx r_c{};
};

DerivedRates derive_rates(const SystemParams& params, double omega_l);

/// derive_rates with the coupling overrides of a pathway mask (g_ef = 0 when
/// disable_ef_coupling is set).
DerivedRates derive_rates(const SystemParams& params, double omega_l, const PathwayMask& mask);

struct DephasingRates {
  double eg = 0.0;
  double fe = 0.0;
  double fg = 0.0;
};

DephasingRates dephasing_rates(const SystemParams& params);

/// Population-dependent dephasing gamma0 + beta rho_ee.
double eid_rate(double gamma0, double beta, double rho_ee);

/// Coupling-weighted polarization g_ge rho_eg + g_ef rho_fe.
cplx polarization(cplx rho_eg, cplx rho_fe, const DerivedRates& rates);

/// Same rates converted to rad/ps.
DerivedRates to_angular(const DerivedRates& rates);

}  // namespace polariton2d
