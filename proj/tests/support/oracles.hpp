#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// c_k = (1/N) sum_j x_j e^{-2 pi i j k / N}, k = 0..N/2, by the O(N^2) sum
std::vector<cplx> naive_dft(const std::vector<double>& x);

// coefficients of a product of two trig polynomials by direct convolution;
// inputs and output indexed by n = 0..max (negative modes via conjugation)
std::vector<cplx> convolve(const std::vector<cplx>& f, const std::vector<cplx>& g, int out_max);

// exp(tM) by scaling and squaring of the Taylor series
Mat2 expm_series(const Mat2& m, double t);

// phi'' - k^2 phi = i k g1 + g2' on [-L, 0], phi(0) = 0, phi'(-L) = 0,
// second-order central differences solved with the Thomas algorithm
std::vector<cplx> fd_poisson(int k, const std::vector<cplx>& g1, const std::vector<cplx>& g2,
                             double depth);

// x/(1+x) as sum_{m>=1} (-1)^{m+1} x^m, stopped when terms drop below 1e-18
double geometric_compose(double x);

}  // namespace oracle
