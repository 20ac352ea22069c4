#pragma once

#include <optional>
#include <span>
#include <vector>

#include "netpot/graph.hpp"

namespace netpot {

/// Q(f) = 1/2 sum_{x,y} b(x,y)(f(x)-f(y))^2 with its per-vertex split
/// m_f(x) = 1/2 sum_y b(x,y)(f(x)-f(y))^2.
struct EnergyReport {
  double value = 0.0;
  std::vector<double> local;
  bool overflow = false;  // value exceeded the overflow guard and is reported as +inf
};

inline constexpr double kEnergyOverflowGuard = 1e300;

EnergyReport energy(const Graph& g, std::span<const double> f);
/// Q(f) alone (compensated summation over unordered edges).
double energy_value(const Graph& g, std::span<const double> f);
double energy_bilinear(const Graph& g, std::span<const double> f, std::span<const double> h);

/// Q~(w) = 1/2 sum b w^2 for a symmetric edge function and the induced m_w.
struct TildeEnergy {
  double value = 0.0;
  std::vector<double> local;
};
TildeEnergy tilde_energy(const Graph& g, std::span<const double> w);

/// Edge function |f(x) - f(y)|.
EdgeFunction gradient_magnitude(const Graph& g, std::span<const double> f);

class Contraction {
 public:
  enum class Kind { clamp, slice, abs, table };

  static Contraction clamp(double a, double b);
  static Contraction slice(double c);
  static Contraction absolute();
  /// Piecewise-linear table through (xs[i], ys[i]), constant beyond the ends.
  /// Rejected unless xs is strictly increasing and every segment has slope
  /// at most 1 in absolute value.
  static Contraction table(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  Kind kind() const { return kind_; }

 private:
  Kind kind_ = Kind::abs;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<double> xs_, ys_;
};

Potential contraction_apply(std::span<const double> f, const Contraction& c);

struct Norms {
  double at_root = 0.0;                // sqrt(Q(f) + f(o)^2)
  std::optional<double> l2;            // ||f||_m
  std::optional<double> energy_l2;     // sqrt(Q(f) + ||f||_m^2)
};

Norms norms(const Graph& g, std::span<const double> f, VertexId o, const Measure* m = nullptr);

/// Squared norm ||f||_m^2 = sum m(x) f(x)^2.
double mass_norm_sq(const Measure& m, std::span<const double> f);

/// Constant C with ||f||_{o2} <= C ||f||_{o1} for every f, from the cheapest
/// connecting path in resistance R = sum 1/b: C = sqrt(max(2, 1 + 2R)).
double norm_equivalence_constant(const Graph& g, VertexId o1, VertexId o2);

}  // namespace netpot
