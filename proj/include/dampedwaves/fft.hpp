#pragma once

#include <complex>
#include <span>

namespace dw {

// Real <-> half-complex transforms of a fixed length n.
// forward is normalized: c[k] = (1/n) sum_j x[j] exp(-2 pi i jk/n), k = 0..n/2.
// inverse evaluates sum over all k of c[k] exp(2 pi i jk/n) using Hermitian symmetry.
// Plans are cached per length; execution is safe from several threads.
class RealFft {
 public:
  static const RealFft& get(int n);

  int size() const noexcept { return n_; }
  void forward(std::span<const double> x, std::span<std::complex<double>> c) const;
  void inverse(std::span<const std::complex<double>> c, std::span<double> x) const;

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;
  ~RealFft();

 private:
  explicit RealFft(int n);
  int n_;
  void* fwd_;
  void* bwd_;
};

}  // namespace dw
