#pragma once

#include <cstdint>

#include "gamma.hpp"

namespace bchf {

// Product of Gamma factors Gamma(z + dz*eps)^{+-1} evaluated in the limit
// eps -> 0+. Each argument carries the derivative dz of its argument along
// the chosen regularization direction, so a factor whose base point z sits
// on a Gamma pole contributes its leading Laurent term (-1)^n / (n! dz eps).
// The limit is finite exactly when numerator and denominator carry the same
// number of pole factors; it is zero when the denominator has more, and an
// error when the numerator has more.
//
// This single mechanism evaluates every degenerate c-function value in the
// library: normalizations at rho(k), sigma-regularized coefficients at
// discrete spectral points, and k -> 0 limits.
class gamma_product {
 public:
  void mul_gamma(cplx z, double dz) { push(z, dz, +1); }
  void div_gamma(cplx z, double dz) { push(z, dz, -1); }
  void mul_const(cplx c) { pref_ *= c; }

  // Net pole count: numerator poles minus denominator poles. The eps-order
  // of the product is -net (net > 0 diverges, net < 0 vanishes).
  int net_poles() const { return net_; }

  bool vanishes() const {
    if (den_fixed_ > 0 && num_fixed_ == 0) return true;
    return num_fixed_ == 0 && den_fixed_ == 0 && net_ < 0;
  }
  bool diverges() const {
    if (num_fixed_ > 0 && den_fixed_ == 0) return true;
    return num_fixed_ == 0 && den_fixed_ == 0 && net_ > 0;
  }
  // Fixed poles on both sides cannot be resolved without a direction.
  bool ambiguous() const { return num_fixed_ > 0 && den_fixed_ > 0; }

  // Limit value; requires net_poles() <= 0 (returns 0 for a vanishing
  // product). Throws if the product diverges.
  //
  // A pole hit with zero direction is an argument that does not move with
  // eps: in the denominator it forces an exact zero, in the numerator the
  // value is genuinely infinite, and one of each is unresolvable.
  cplx limit() const {
    require(num_fixed_ == 0 || den_fixed_ > 0, "gamma_product: divergent limit");
    require(!(num_fixed_ > 0 && den_fixed_ > 0),
            "gamma_product: pole with zero direction");
    if (den_fixed_ > 0) return 0.0;
    require(net_ <= 0, "gamma_product: divergent limit");
    if (net_ < 0) return 0.0;
    return pref_ * polefac_ * std::exp(logreg_);
  }

 private:
  void push(cplx z, double dz, int side) {
    int n = 0;
    if (near_pole(z, n, pole_tol)) {
      if (dz == 0.0) {
        (side > 0 ? num_fixed_ : den_fixed_) += 1;
        return;
      }
      // Gamma(-n + dz eps) ~ (-1)^n / (n! dz eps)
      double nf = 1.0;
      for (int j = 2; j <= n; ++j) nf *= j;
      cplx lead = ((n & 1) ? -1.0 : 1.0) / (nf * dz);
      if (side > 0) {
        polefac_ *= lead;
        ++net_;
      } else {
        polefac_ /= lead;
        --net_;
      }
      return;
    }
    logreg_ += double(side) * log_gamma(z);
  }

  static constexpr double pole_tol = 1e-8;
  cplx pref_ = 1.0;
  cplx polefac_ = 1.0;
  cplx logreg_ = 0.0;
  int net_ = 0;
  int num_fixed_ = 0;
  int den_fixed_ = 0;
};

}  // namespace bchf
