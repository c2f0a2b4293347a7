#include "annulus/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace annulus {

namespace {

using LComplex = std::complex<long double>;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// Extended-precision accumulation keeps coefficient noise near the rounding
// level of the samples themselves, which the high-harmonic radial fits need.
void fft_in_place(std::vector<LComplex>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // one root table indexed by stride, every twiddle straight from cos/sin
  std::vector<LComplex> roots(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const long double ang = -2.0L * kPiL * static_cast<long double>(k) / static_cast<long double>(n);
    roots[k] = LComplex(std::cos(ang), std::sin(ang));
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const LComplex w = roots[k * stride];
        const LComplex u = a[i + k];
        const LComplex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

std::vector<Complex> dft_forward_scaled(std::span<const Complex> input) {
  const int n = static_cast<int>(input.size());
  if (n == 0) throw ParameterError("transform input must be nonempty");
  std::vector<LComplex> work;
  if (is_power_of_two(n)) {
    work.assign(input.begin(), input.end());
    fft_in_place(work);
  } else {
    // direct evaluation; also the convention reference for small hand checks
    work.resize(n);
    for (int m = 0; m < n; ++m) {
      LComplex acc(0.0L, 0.0L);
      for (int j = 0; j < n; ++j) {
        const long double ang = -2.0L * kPiL * static_cast<long double>(j) *
                                static_cast<long double>(m) / static_cast<long double>(n);
        acc += LComplex(input[j]) * LComplex(std::cos(ang), std::sin(ang));
      }
      work[m] = acc;
    }
  }
  const long double scale = 1.0L / static_cast<long double>(n);
  std::vector<Complex> out(n);
  for (int m = 0; m < n; ++m) {
    const LComplex v = work[m] * scale;
    out[m] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return out;
}

Complex dft_coefficient(std::span<const Complex> bins, int k) {
  const int n = static_cast<int>(bins.size());
  if (n == 0) throw ParameterError("empty coefficient bins");
  int idx = k % n;
  if (idx < 0) idx += n;
  return bins[static_cast<std::size_t>(idx)];
}

}  // namespace annulus
