#pragma once

#include <vector>

#include <unsupported/Eigen/FFT>

#include "dimerlab/grid.hpp"

namespace dimerlab {

// Thin wrappers over Eigen's FFT (kissfft backend). A fresh plan per call keeps
// these safe to use from parallel scans.

inline std::vector<cplx> fft(const std::vector<cplx>& in) {
    Eigen::FFT<double> f;
    std::vector<cplx> out;
    f.fwd(out, in);
    return out;
}

inline std::vector<cplx> ifft(const std::vector<cplx>& in) {
    Eigen::FFT<double> f;
    std::vector<cplx> out;
    f.inv(out, in);
    return out;
}

// Angular wavenumbers matching fft() bin ordering for spacing dx.
inline std::vector<double> fft_wavenumbers(std::size_t n, double dx) {
    std::vector<double> k(n);
    const double dk = 2.0 * 3.14159265358979323846 / (static_cast<double>(n) * dx);
    for (std::size_t i = 0; i < n; ++i) {
        const auto half = static_cast<long long>(n / 2);
        long long idx = static_cast<long long>(i);
        if (idx > half - 1 + static_cast<long long>(n % 2)) idx -= static_cast<long long>(n);
        k[i] = dk * static_cast<double>(idx);
    }
    return k;
}

}  // namespace dimerlab
