#ifndef CXOSC_SAMPLING_HPP
#define CXOSC_SAMPLING_HPP

#include "cxosc/params.hpp"
#include "cxosc/poly.hpp"

#include <complex>
#include <random>
#include <vector>

namespace cxosc {

/*
 * Draws a ν-vector that is hermitian and positive. For i = 1..λ-1,
 * ν_i = r_i e^{-iπ(1/2 + i/λ)} with real r_i = r_{λ-i}; then β_i = 2 r_i
 * sin(πi/λ) is real and ν̂ is real. Draws are rejected until every
 * s + ν̂_s exceeds `margin`.
 */
std::vector<std::complex<double>> random_valid_nu(int lambda, std::mt19937_64& rng, double radius = 0.3,
                                                  double margin = 0.2);

/// Polynomial of exact degree `degree` with coefficients uniform in the unit square.
DensePoly<double> random_poly(int degree, std::mt19937_64& rng);

/// Uniform double in [lo, hi) from raw 64-bit draws (platform independent).
double uniform(std::mt19937_64& rng, double lo, double hi);

} // namespace cxosc

#endif // CXOSC_SAMPLING_HPP
