#include "dampedwaves/wiener.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dampedwaves/errors.hpp"

namespace dw {

namespace {

double weight(int n, double s, double lambda) {
  const double a = std::abs(n);
  return std::pow(1.0 + a, s) * std::exp(lambda * a);
}

void require_finite(const SpectrumField& f) {
  if (!f.is_finite()) throw NumericError("field has non-finite coefficients");
}

}  // namespace

void NormSpec::validate() const {
  if (!(s >= 0.0) || !(lambda >= 0.0) || k < 0 || k > 3)
    throw ConfigError("norm spec needs s >= 0, lambda >= 0, k in 0..3");
}

double wiener_norm(const SpectrumField& f, const NormSpec& spec) {
  spec.validate();
  require_finite(f);
  double sum = std::abs(f.coeff(0));
  for (int n = 1; n <= f.max_mode(); ++n) sum += 2.0 * weight(n, spec.s, spec.lambda) * std::abs(f.coeff(n));
  return sum;
}

double wiener_norm(const SpectrumField& f, double s, double lambda) {
  return wiener_norm(f, NormSpec{s, lambda, 0});
}

StripNorm strip_norm_of(const StripField& du, double s, double lambda) {
  const auto& g = du.grid();
  StripNorm out;
  std::vector<double> mag(g.nodes());
  for (int n = 0; n <= du.max_mode(); ++n) {
    auto col = du.column(n);
    for (int j = 0; j < g.nodes(); ++j) {
      mag[j] = std::abs(col[j]);
      if (!std::isfinite(mag[j])) throw NumericError("strip field has non-finite values");
    }
    const double w = (n == 0 ? 1.0 : 2.0) * weight(n, s, lambda);
    out.value += w * trapezoid(mag, g.dz());
    out.tail += w * mag.front() / std::max(n, 1);
  }
  return out;
}

StripNorm strip_norm_detailed(const StripField& u, const NormSpec& spec) {
  spec.validate();
  if (spec.k == 0) return strip_norm_of(u, spec.s, spec.lambda);
  return strip_norm_of(vertical_derivative(u, spec.k), spec.s, spec.lambda);
}

double strip_norm(const StripField& u, const NormSpec& spec) {
  return strip_norm_detailed(u, spec).value;
}

double sobolev_norm(const SpectrumField& f, double s) {
  if (!(s >= 0.0)) throw ConfigError("sobolev index must be nonnegative");
  require_finite(f);
  auto w = [s](int n) {
    const double a = std::abs(n);
    return 1.0 + (a == 0.0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(a, s));
  };
  double sum = w(0) * w(0) * std::norm(f.coeff(0));
  for (int n = 1; n <= f.max_mode(); ++n) sum += 2.0 * w(n) * w(n) * std::norm(f.coeff(n));
  return std::sqrt(sum);
}

SpectrumField compose_G(const SpectrumField& v) {
  const int m = padded_size(v.n_modes());
  auto x = to_grid(dealias(v), m);
  for (int j = 0; j < m; ++j) {
    const double d = 1.0 + x[j];
    if (!(d > 0.0))
      throw SingularityError("1 + v vanishes at grid point " + std::to_string(j), j,
                             grid_point(j, m));
    x[j] = x[j] / d;
  }
  return from_grid(x, v.n_modes(), dealias_cutoff(v.n_modes()));
}

double constant_k(double q) {
  if (!(q >= 0.0)) throw ConfigError("k_q needs q >= 0");
  return q <= 1.0 ? 1.0 : std::pow(2.0, q);
}

double constant_K(double r, double s, int n) {
  if (n < 2) throw ConfigError("K_{r,s,n} needs n >= 2");
  const double x = constant_k(r) * constant_k(s);
  if (x == 1.0) return n;
  return x * (std::pow(x, n - 1) - 1.0) / (x - 1.0);
}

}  // namespace dw
