// geo3/ode.hpp — classic fixed-step fourth-order Runge–Kutta over
// std::array<double, N> state vectors. Callers own the stepping loop so they
// can renormalize, record samples, or bail out mid-trajectory.
#pragma once

#include <array>
#include <cstddef>

namespace geo3 {

namespace detail {

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double a,
                           const std::array<double, N>& d) {
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * d[i];
  return out;
}

}  // namespace detail

/// One RK4 step of y' = f(t, y) from (t, y) with step h.
template <std::size_t N, class F>
std::array<double, N> rk4_step(F&& f, double t, const std::array<double, N>& y, double h) {
  const auto k1 = f(t, y);
  const auto k2 = f(t + 0.5 * h, detail::axpy(y, 0.5 * h, k1));
  const auto k3 = f(t + 0.5 * h, detail::axpy(y, 0.5 * h, k2));
  const auto k4 = f(t + h, detail::axpy(y, h, k3));
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace geo3
