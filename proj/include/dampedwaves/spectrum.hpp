#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace dw {

using cplx = std::complex<double>;

// Real 2pi-periodic function stored by its Fourier coefficients
// c(n), |n| <= N/2, with c(-n) = conj(c(n)). Only n >= 0 is stored.
// The Nyquist coefficient is kept at zero.
class SpectrumField {
 public:
  SpectrumField() = default;
  explicit SpectrumField(int n_modes);

  int n_modes() const noexcept { return n_; }
  int max_mode() const noexcept { return n_ / 2; }
  bool empty() const noexcept { return n_ == 0; }

  cplx coeff(int n) const;
  void set(int n, cplx value);
  void add(int n, cplx value);

  std::span<const cplx> half() const noexcept { return c_; }
  std::span<cplx> half() noexcept { return c_; }

  double max_abs() const noexcept;
  bool is_zero_mean() const noexcept;
  bool is_finite() const noexcept;
  void remove_mean() noexcept;

  SpectrumField& operator+=(const SpectrumField& o);
  SpectrumField& operator-=(const SpectrumField& o);
  SpectrumField& operator*=(double s);

  friend bool operator==(const SpectrumField&, const SpectrumField&) = default;

 private:
  int n_ = 0;
  std::vector<cplx> c_;
};

SpectrumField operator+(SpectrumField a, const SpectrumField& b);
SpectrumField operator-(SpectrumField a, const SpectrumField& b);
SpectrumField operator*(double s, SpectrumField a);

double grid_point(int j, int points);

SpectrumField transform(std::span<const double> samples);
std::vector<double> inverse_transform(const SpectrumField& f);

// samples on a finer uniform grid (points >= N, even)
std::vector<double> to_grid(const SpectrumField& f, int points);
// transform samples from any even grid and keep modes |n| <= cutoff (and < N/2)
SpectrumField from_grid(std::span<const double> samples, int n_modes, int cutoff);

// grid used for pointwise work and the retained band after it
int padded_size(int n_modes);
int dealias_cutoff(int n_modes);
SpectrumField dealias(const SpectrumField& f);

using Symbol = std::function<cplx(int)>;
SpectrumField apply_multiplier(const SpectrumField& f, const Symbol& m);

namespace symbols {
Symbol calderon(double power = 1.0);  // |n|^p, 0^0 = 1
Symbol d1();                          // i n
Symbol d11();                         // -n^2
Symbol exp_weight(double lambda);     // e^{lambda |n|}
Symbol heat(double kappa);            // e^{-kappa n^2}
}  // namespace symbols

SpectrumField mollify(const SpectrumField& f, double kappa);

SpectrumField pointwise_product(const SpectrumField& f, const SpectrumField& g);
SpectrumField pointwise_map(const SpectrumField& f, const std::function<double(double)>& fn);

}  // namespace dw
