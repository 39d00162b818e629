#include "acx/fft.hpp"

#include <cmath>

namespace acx {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int signed_mode(int bin, int n) { return bin <= n / 2 ? bin : bin - n; }

static void fft_radix2(std::vector<Complex>& a, bool inverse) {
  const int n = int(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * M_PI / len * (inverse ? 1.0 : -1.0);
    Complex wlen(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (int k = 0; k < len / 2; ++k) {
        Complex u = a[i + k];
        Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= double(n);
}

static void dft_direct(std::vector<Complex>& a, bool inverse) {
  const int n = int(a.size());
  std::vector<Complex> out(n, Complex(0, 0));
  double sgn = inverse ? 1.0 : -1.0;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      double ang = sgn * 2.0 * M_PI * k * j / n;
      out[k] += a[j] * Complex(std::cos(ang), std::sin(ang));
    }
  }
  if (inverse)
    for (auto& x : out) x /= double(n);
  a = std::move(out);
}

void fft_forward(std::vector<Complex>& data) {
  if (is_power_of_two(int(data.size())))
    fft_radix2(data, false);
  else
    dft_direct(data, false);
}

void fft_inverse(std::vector<Complex>& data) {
  if (is_power_of_two(int(data.size())))
    fft_radix2(data, true);
  else
    dft_direct(data, true);
}

}  // namespace acx
