#include "densband/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "densband/quadrature.hpp"

namespace densband {

ConvolutionKernel biweight_kernel() {
  ConvolutionKernel k;
  k.name = "biweight";
  k.support_radius = 1.0;
  k.order = 2;
  k.twice_differentiable = true;
  k.eval = [](double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    double w = 1.0 - u * u;
    return 15.0 / 16.0 * w * w;
  };
  k.deriv = [](double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    return -15.0 / 4.0 * u * (1.0 - u * u);
  };
  return k;
}

KernelSpec KernelSpec::haar() {
  KernelSpec s;
  s.family_ = Family::Haar;
  s.order_ = 1;
  s.name_ = "haar";
  s.phi_ = std::make_shared<ScalingFunction>(ScalingFunction::haar());
  return s;
}

KernelSpec KernelSpec::battle_lemarie(int r, double tol) {
  if (r == 1) return haar();
  KernelSpec s;
  s.family_ = Family::BattleLemarie;
  s.order_ = r;
  s.name_ = "bl" + std::to_string(r);
  s.phi_ = std::make_shared<ScalingFunction>(
      ScalingFunction::battle_lemarie(SplineOrder(r), tol));
  return s;
}

KernelSpec KernelSpec::convolution(ConvolutionKernel kernel) {
  if (!kernel.eval) throw std::invalid_argument("convolution kernel needs an evaluator");
  double R = kernel.support_radius;
  if (!(R > 0.0)) throw std::invalid_argument("convolution kernel needs positive support radius");
  for (double u : {0.1 * R, 0.37 * R, 0.81 * R})
    if (std::abs(kernel.eval(u) - kernel.eval(-u)) > 1e-12)
      throw std::invalid_argument("convolution kernel must be symmetric");
  double mass = gauss_legendre_composite(kernel.eval, -R, R, 64);
  if (std::abs(mass - 1.0) > 1e-8)
    throw std::invalid_argument("convolution kernel must integrate to one");
  KernelSpec s;
  s.family_ = Family::Convolution;
  s.order_ = kernel.order;
  s.name_ = kernel.name.empty() ? "convolution" : kernel.name;
  s.conv_ = std::make_shared<ConvolutionKernel>(std::move(kernel));
  return s;
}

KernelSpec KernelSpec::from_name(const std::string& name) {
  if (name == "haar") return haar();
  if (name == "bl2") return battle_lemarie(2);
  if (name == "bl3") return battle_lemarie(3);
  if (name == "bl4") return battle_lemarie(4);
  if (name == "biweight") return convolution(biweight_kernel());
  throw std::invalid_argument("unknown kernel family: " + name);
}

const ScalingFunction& KernelSpec::phi() const {
  if (!phi_) throw std::logic_error("kernel family has no scaling function");
  return *phi_;
}

const ConvolutionKernel& KernelSpec::conv() const {
  if (!conv_) throw std::logic_error("kernel family is not a convolution kernel");
  return *conv_;
}

double kernel_eval(const KernelSpec& spec, double x, double y) {
  switch (spec.family()) {
    case KernelSpec::Family::Haar:
      return std::floor(x) == std::floor(y) ? 1.0 : 0.0;
    case KernelSpec::Family::Convolution:
      return spec.conv().eval(x - y);
    case KernelSpec::Family::BattleLemarie: {
      const ScalingFunction& phi = spec.phi();
      // k-window: both phi(x-k) and phi(y-k) nonzero
      double loa = std::min(x, y) - phi.support_hi();
      double hia = std::max(x, y) - phi.support_lo();
      long k0 = static_cast<long>(std::ceil(loa));
      long k1 = static_cast<long>(std::floor(hia));
      double s = 0.0;
      for (long k = k0; k <= k1; ++k) s += phi(x - k) * phi(y - k);
      return s;
    }
  }
  return 0.0;
}

}  // namespace densband
