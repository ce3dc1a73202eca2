#pragma once

#include <functional>
#include <memory>
#include <string>

#include "densband/scaling.hpp"

namespace densband {

/// A symmetric univariate convolution kernel K(u) with compact support
/// [-support_radius, support_radius], unit integral and `order` vanishing
/// moments. `deriv` (analytic K') is required by the extreme-value constants;
/// smoothness is declared, not inferred.
struct ConvolutionKernel {
  std::string name;
  double support_radius = 1.0;
  int order = 2;
  bool twice_differentiable = false;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;  // may be empty
};

/// The biweight kernel K(u) = (15/16)(1-u^2)^2 on [-1,1].
ConvolutionKernel biweight_kernel();

/// Tagged description of an estimation kernel family. The bivariate kernel is
/// K(x,y) = I([x]=[y]) for Haar, sum_k phi_r(x-k) phi_r(y-k) for
/// Battle-Lemarie, and K(x-y) for a convolution kernel.
class KernelSpec {
 public:
  enum class Family { Haar, BattleLemarie, Convolution };

  static KernelSpec haar();
  static KernelSpec battle_lemarie(int r, double tol = 1e-12);
  /// Validates symmetry and unit integral (quadrature check).
  static KernelSpec convolution(ConvolutionKernel kernel);
  /// Parse "haar" | "bl2" | "bl3" | "bl4" | "biweight".
  static KernelSpec from_name(const std::string& name);

  Family family() const { return family_; }
  /// Regularity r: 1 for Haar, the spline order for Battle-Lemarie, the
  /// number of vanishing moments for a convolution kernel.
  int order() const { return order_; }
  const ScalingFunction& phi() const;
  const ConvolutionKernel& conv() const;
  const std::string& name() const { return name_; }

 private:
  KernelSpec() = default;
  Family family_ = Family::Haar;
  int order_ = 1;
  std::string name_;
  std::shared_ptr<const ScalingFunction> phi_;
  std::shared_ptr<const ConvolutionKernel> conv_;
};

/// Bivariate kernel value K(x, y); symmetric in (x, y).
double kernel_eval(const KernelSpec& spec, double x, double y);

}  // namespace densband
