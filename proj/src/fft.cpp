#include "dampedwaves/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "dampedwaves/errors.hpp"

namespace dw {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const RealFft& RealFft::get(int n) {
  // never destroyed: plans stay valid through static destruction
  static auto* cache = new std::map<int, std::unique_ptr<RealFft>>();
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = cache->find(n);
  if (it == cache->end()) {
    it = cache->emplace(n, std::unique_ptr<RealFft>(new RealFft(n))).first;
  }
  return *it->second;
}

RealFft::RealFft(int n) : n_(n) {
  if (n < 2) throw ConfigError("fft length must be at least 2");
  std::vector<double> x(n);
  std::vector<std::complex<double>> c(n / 2 + 1);
  auto* cp = reinterpret_cast<fftw_complex*>(c.data());
  // FFTW_ESTIMATE keeps plans (and so results) independent of timing
  fwd_ = fftw_plan_dft_r2c_1d(n, x.data(), cp, FFTW_ESTIMATE | FFTW_UNALIGNED);
  bwd_ = fftw_plan_dft_c2r_1d(n, cp, x.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!fwd_ || !bwd_) throw NumericError("fftw plan creation failed");
}

RealFft::~RealFft() {
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void RealFft::forward(std::span<const double> x, std::span<std::complex<double>> c) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(c.size()) != n_ / 2 + 1)
    throw ConfigError("fft forward: size mismatch");
  // r2c does not touch its input but the signature is non-const
  thread_local std::vector<double> buf;
  buf.assign(x.begin(), x.end());
  fftw_execute_dft_r2c(static_cast<fftw_plan>(fwd_), buf.data(),
                       reinterpret_cast<fftw_complex*>(c.data()));
  const double s = 1.0 / n_;
  for (auto& v : c) v *= s;
}

void RealFft::inverse(std::span<const std::complex<double>> c, std::span<double> x) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(c.size()) != n_ / 2 + 1)
    throw ConfigError("fft inverse: size mismatch");
  // c2r destroys its input
  thread_local std::vector<std::complex<double>> buf;
  buf.assign(c.begin(), c.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(bwd_),
                       reinterpret_cast<fftw_complex*>(buf.data()), x.data());
}

}  // namespace dw
