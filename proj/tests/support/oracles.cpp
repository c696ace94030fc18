#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

std::vector<cplx> naive_dft(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<cplx> c(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
    c[k] = s / double(n);
  }
  return c;
}

std::vector<cplx> convolve(const std::vector<cplx>& f, const std::vector<cplx>& g, int out_max) {
  auto at = [](const std::vector<cplx>& v, int n) -> cplx {
    const int a = std::abs(n);
    if (a >= static_cast<int>(v.size())) return 0.0;
    return n >= 0 ? v[a] : std::conj(v[a]);
  };
  const int fm = static_cast<int>(f.size()) - 1;
  std::vector<cplx> out(out_max + 1);
  for (int n = 0; n <= out_max; ++n)
    for (int m = -fm; m <= fm; ++m) out[n] += at(f, m) * at(g, n - m);
  return out;
}

namespace {
Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}
}  // namespace

Mat2 expm_series(const Mat2& m, double t) {
  double norm = 0.0;
  for (auto& r : m)
    for (double v : r) norm = std::max(norm, std::abs(v * t));
  int sq = 0;
  while (norm > 0.25) {
    norm /= 2.0;
    ++sq;
  }
  const double scale = t / std::pow(2.0, sq);
  Mat2 a{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a[i][j] = m[i][j] * scale;
  Mat2 sum{{{1.0, 0.0}, {0.0, 1.0}}}, term = sum;
  for (int k = 1; k < 40; ++k) {
    term = mul(term, a);
    for (auto& r : term)
      for (double& v : r) v /= k;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum[i][j] += term[i][j];
  }
  for (int s = 0; s < sq; ++s) sum = mul(sum, sum);
  return sum;
}

std::vector<cplx> fd_poisson(int k, const std::vector<cplx>& g1, const std::vector<cplx>& g2,
                             double depth) {
  const int nodes = static_cast<int>(g1.size());
  const int top = nodes - 1;
  const double h = depth / top;
  const cplx ik(0.0, k);
  // unknowns phi_0..phi_{top-1}, phi_top = 0
  std::vector<cplx> a(top), b(top), c(top), d(top);
  for (int j = 0; j < top; ++j) {
    const cplx dg2 = j == 0 ? (g2[1] - g2[0]) / h : (g2[j + 1] - g2[j - 1]) / (2.0 * h);
    a[j] = 1.0 / (h * h);
    c[j] = 1.0 / (h * h);
    b[j] = -2.0 / (h * h) - double(k) * k;
    d[j] = ik * g1[j] + dg2;
  }
  // phi'(-L) = 0 through a mirrored ghost node
  c[0] = 2.0 / (h * h);
  a[0] = 0.0;
  for (int j = 1; j < top; ++j) {
    const cplx w = a[j] / b[j - 1];
    b[j] -= w * c[j - 1];
    d[j] -= w * d[j - 1];
  }
  std::vector<cplx> phi(nodes, 0.0);
  phi[top - 1] = d[top - 1] / b[top - 1];
  for (int j = top - 2; j >= 0; --j) phi[j] = (d[j] - c[j] * phi[j + 1]) / b[j];
  return phi;
}

double geometric_compose(double x) {
  if (std::abs(x) >= 1.0) throw std::domain_error("geometric series diverges");
  double sum = 0.0, p = x, sign = 1.0;
  for (int m = 1; m < 100000; ++m) {
    sum += sign * p;
    if (std::abs(p) < 1e-18) break;
    p *= x;
    sign = -sign;
  }
  return sum;
}

}  // namespace oracle
