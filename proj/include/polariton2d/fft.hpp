#pragma once

#include <complex>
#include <vector>

namespace polariton2d {

/// Unnormalized DFT with the e^{+i} kernel: X_m = sum_k x_k e^{+2 pi i k m / N}.
/// Safe to call from several threads.
std::vector<std::complex<double>> dft_positive(const std::vector<std::complex<double>>& in);

}  // namespace polariton2d
