#pragma once

#include <numbers>

namespace renq::constants {

// CODATA 2018
inline constexpr double mu_B = 9.2740100783e-24;   // J/T
inline constexpr double mu_N = 5.0507837461e-27;   // J/T
inline constexpr double mu_0 = 1.25663706212e-6;   // T m/A
inline constexpr double eps_0 = 8.8541878128e-12;  // F/m
inline constexpr double h = 6.62607015e-34;        // J/Hz, exact
inline constexpr double hbar = h / (2 * std::numbers::pi);  // J s
inline constexpr double c = 299792458.0;           // m/s
inline constexpr double k_B = 1.380649e-23;        // J/K
inline constexpr double pi = std::numbers::pi;

}  // namespace renq::constants
