#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netpot/graph.hpp"

namespace netpot {

struct SolverConfig {
  double rel_tol = 1e-10;           // relative residual target for the iterative path
  std::size_t direct_limit = 2000;  // below this many unknowns factorize directly
  std::size_t max_iterations = 0;   // 0: 10 * unknowns, at least 1000
};

struct SolveResult {
  Potential f;
  double residual = 0.0;  // ||A x - rhs|| / max(||rhs||, tiny) over the free vertices
  std::size_t iterations = 0;
  bool direct = false;
  std::size_t unknowns = 0;
};

/// Solves ((L + M) f)(x) = 0 at every free vertex with f prescribed on the
/// fixed vertices, where (L f)(x) = sum_y b(x,y)(f(x) - f(y)) and M is
/// multiplication by `mass` (empty span: M = 0).
SolveResult solve_dirichlet(const Graph& g, std::span<const double> mass, const std::vector<char>& fixed,
                            std::span<const double> fixed_values, const SolverConfig& cfg = {});

/// (L f)(x) = sum_y b(x,y)(f(x) - f(y)).
std::vector<double> laplacian_times(const Graph& g, std::span<const double> f);

}  // namespace netpot
