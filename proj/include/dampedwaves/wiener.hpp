#pragma once

#include "dampedwaves/spectrum.hpp"
#include "dampedwaves/strip.hpp"

namespace dw {

struct NormSpec {
  double s = 0.0;
  double lambda = 0.0;
  int k = 0;  // vertical derivatives, strip norms only
  void validate() const;
};

// sum over represented modes of (1+|n|)^s e^{lambda |n|} |f^(n)|
double wiener_norm(const SpectrumField& f, const NormSpec& spec);
double wiener_norm(const SpectrumField& f, double s, double lambda = 0.0);

struct StripNorm {
  double value = 0.0;  // quadrature over [-depth, 0]
  double tail = 0.0;   // estimate of the part below -depth
};

// derivatives in depth are taken with the 4th-order stencil
StripNorm strip_norm_detailed(const StripField& u, const NormSpec& spec);
double strip_norm(const StripField& u, const NormSpec& spec);
// same sum for a field whose k-th depth derivative is already `du`
StripNorm strip_norm_of(const StripField& du, double s, double lambda);

// (sum (1+|n|^s)^2 |f^(n)|^2)^(1/2), with 0^0 = 1
double sobolev_norm(const SpectrumField& f, double s);

// x/(1+x) evaluated on the padded grid
SpectrumField compose_G(const SpectrumField& v);

double constant_k(double q);
double constant_K(double r, double s, int n);

}  // namespace dw
