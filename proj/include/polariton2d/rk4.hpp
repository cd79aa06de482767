#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace polariton2d {

/// One classical Runge-Kutta step for y' = f(t, y) on a fixed-size complex
/// vector. `deriv(t, y, dy)` writes the derivative into dy.
template <std::size_t N, typename Deriv>
std::array<std::complex<double>, N> rk4_step(const std::array<std::complex<double>, N>& y, double t, double dt,
                                             Deriv&& deriv) {
  using V = std::array<std::complex<double>, N>;
  V k1, k2, k3, k4, tmp;
  const double h2 = 0.5 * dt;
  deriv(t, y, k1);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h2 * k1[i];
  deriv(t + h2, tmp, k2);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h2 * k2[i];
  deriv(t + h2, tmp, k3);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
  deriv(t + dt, tmp, k4);
  V out;
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + w * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  return out;
}

}  // namespace polariton2d
