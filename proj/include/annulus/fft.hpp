#pragma once

#include <span>
#include <vector>

#include "annulus/core.hpp"

namespace annulus {

/// Forward discrete transform with 1/n scaling:
///   out[m] = (1/n) * sum_j in[j] * exp(-2*pi*i*j*m/n),  m = 0..n-1,
/// so that out[m] is directly the Fourier coefficient of the mode e^{i m theta}
/// sampled at theta_j = 2*pi*j/n. Uses an iterative radix-2 FFT when n is a
/// power of two and direct summation otherwise.
std::vector<Complex> dft_forward_scaled(std::span<const Complex> input);

/// Bin lookup for a signed harmonic index: c_k = bins[((k % n) + n) % n].
Complex dft_coefficient(std::span<const Complex> bins, int k);

}  // namespace annulus
