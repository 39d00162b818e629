#pragma once

#include <vector>

#include "acx/types.hpp"

namespace acx {

/// In-place iterative radix-2 FFT; falls back to a direct DFT when the
/// length is not a power of two (correct, O(n^2)).
void fft_forward(std::vector<Complex>& data);
void fft_inverse(std::vector<Complex>& data);

bool is_power_of_two(int n);

/// Signed frequency of FFT bin k for length n: k for k <= n/2, k - n after.
int signed_mode(int bin, int n);

}  // namespace acx
