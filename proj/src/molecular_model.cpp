#include "polariton2d/molecular_model.hpp"

#include <cmath>

namespace polariton2d {

DerivedRates derive_rates(const SystemParams& params, double omega_l) {
  DerivedRates r;
  r.g_collective = params.g_collective;
  r.g_ge = params.effective_g();
  r.g_ef = std::sqrt(2.0) * r.g_ge * (1.0 + params.delta_el);
  r.kappa = params.effective_kappa();
  r.delta_c = omega_l - params.omega_c;
  r.delta_ge = omega_l - params.omega_e;
  r.delta_ef = omega_l - params.omega_fe;
  r.delta_mech = params.delta_mech();
  r.beta = params.beta_eid;
  const auto d = dephasing_rates(params);
  r.r_eg = {d.eg, -r.delta_ge};
  r.r_fe = {d.fe, -r.delta_ef};
  r.r_fg = {d.fg, -(r.delta_ge + r.delta_ef)};
  r.r_c = {0.5 * r.kappa, -r.delta_c};
  return r;
}

DerivedRates derive_rates(const SystemParams& params, double omega_l, const PathwayMask& mask) {
  auto r = derive_rates(params, omega_l);
  if (mask.disable_ef_coupling) r.g_ef = 0.0;
  return r;
}

DephasingRates dephasing_rates(const SystemParams& params) {
  return {0.5 * params.gamma_ge, 0.5 * params.gamma_ef, params.gamma_ge + params.gamma_ef};
}

double eid_rate(double gamma0, double beta, double rho_ee) { return gamma0 + beta * rho_ee; }

cplx polarization(cplx rho_eg, cplx rho_fe, const DerivedRates& rates) {
  return rates.g_ge * rho_eg + rates.g_ef * rho_fe;
}

DerivedRates to_angular(const DerivedRates& in) {
  const double s = wavenumber_to_angular(1.0);
  DerivedRates r = in;
  r.g_ge *= s;
  r.g_collective *= s;
  r.g_ef *= s;
  r.kappa *= s;
  r.delta_c *= s;
  r.delta_ge *= s;
  r.delta_ef *= s;
  r.delta_mech *= s;
  r.beta *= s;
  r.r_eg *= s;
  r.r_fe *= s;
  r.r_fg *= s;
  r.r_c *= s;
  return r;
}

}  // namespace polariton2d
