#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kacwreath/arrangement.hpp"
#include "kacwreath/kmmodule.hpp"

namespace kw {

enum class FockSpace { V, V0 };

/// Multiplicity of omega_0 - N delta + beta: p_{r+1}(N - beta^2/2) in V and
/// p_r(N - beta^2/2) in V0.
BigInt frenkel_kac_mult(const RootSystem& rs, const RootVec& beta, long N, FockSpace space);

/// dim L(mu)[nu] for a finite simply-laced root system; mu and nu are given in
/// fundamental coordinates. Throws InputError if mu is not dominant.
BigInt freudenthal_finite(const IntMatrix& cartan, const std::vector<long>& mu, const std::vector<long>& nu);

/// dim L(Lambda)[Lambda - sum c_i alpha_i] for an affine diagram, with vertex 0
/// carrying delta-degree 1. Throws WindowExhausted if c_0 > depth.
BigInt freudenthal_affine(const AffineDynkin& d, const std::vector<long>& labels, const std::vector<long>& c,
                          long depth);

using WindowKey = std::pair<long, RootVec>;  // (j, beta)

struct ModuleWindow {
  GammaDescriptor group;
  long delta_depth = 0;
  long beta_norm_bound = 0;
  bool truncated = false;  // beta_norm_bound < 2 * delta_depth
  std::map<WindowKey, BigInt> mult;
};

struct WindowOptions {
  std::optional<long> delta_depth;
  std::optional<long> beta_norm_bound;
  unsigned threads = 1;
};

/// Root-lattice points with beta^2 <= bound, grown from 0 by simple roots.
std::vector<RootVec> lattice_ball(const RootSystem& rs, long bound);

ModuleWindow build_window(const GammaDescriptor& g, long n, const WindowOptions& opt = {});

struct DecompositionRow {
  RootVec beta;  // mu = omega_0 - j delta + beta
  long j = 0;
  BigInt hom_mult;
  BigInt weight_mult_at_target;
  Rational mu_norm_sq;
  std::map<long, BigInt> degree_profile;  // Heisenberg degree -> contribution at target
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;
  bool residual_ok = true;
  std::vector<std::string> diagnostics;
  long delta_depth = 0;
  long beta_norm_bound = 0;
  bool truncated = false;
  std::optional<long> heisenberg_period;
};

DecompositionReport decompose(const ModuleWindow& window, const SubalgebraDescriptor& a, long n);

}  // namespace kw
