#include "netpot/linear_solve.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>

#include "netpot/error.hpp"

namespace netpot {

std::vector<double> laplacian_times(const Graph& g, std::span<const double> f) {
  std::vector<double> out(g.size(), 0.0);
  for (Index i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto w = g.weights(i);
    double s = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) s += w[k] * (f[i] - f[nb[k]]);
    out[i] = s;
  }
  return out;
}

SolveResult solve_dirichlet(const Graph& g, std::span<const double> mass, const std::vector<char>& fixed,
                            std::span<const double> fixed_values, const SolverConfig& cfg) {
  const Index n = g.size();
  if (fixed.size() != n || fixed_values.size() != n || (!mass.empty() && mass.size() != n)) {
    throw Error(ErrorKind::invalid_argument, "solver input sizes do not match graph");
  }
  SolveResult res;
  res.f.assign(n, 0.0);
  std::vector<std::ptrdiff_t> slot(n, -1);
  std::ptrdiff_t nfree = 0;
  for (Index i = 0; i < n; ++i) {
    if (fixed[i]) {
      res.f[i] = fixed_values[i];
    } else {
      slot[i] = nfree++;
    }
  }
  res.unknowns = static_cast<std::size_t>(nfree);
  if (nfree == 0) return res;

  using SpMat = Eigen::SparseMatrix<double>;
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nfree);
  bool anchored = false;
  for (Index i = 0; i < n; ++i) {
    if (slot[i] < 0) continue;
    const std::ptrdiff_t r = slot[i];
    double diag = g.degree(i);
    if (!mass.empty()) {
      diag += mass[i];
      if (mass[i] > 0.0) anchored = true;
    }
    trip.emplace_back(r, r, diag);
    auto nb = g.neighbors(i);
    auto w = g.weights(i);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (slot[nb[k]] >= 0) {
        trip.emplace_back(r, slot[nb[k]], -w[k]);
      } else {
        rhs[r] += w[k] * fixed_values[nb[k]];
        anchored = true;
      }
    }
  }
  if (!anchored) throw Error(ErrorKind::solver, "singular system: no fixed vertex and no mass term");
  SpMat a(nfree, nfree);
  a.setFromTriplets(trip.begin(), trip.end());

  Eigen::VectorXd x;
  if (static_cast<std::size_t>(nfree) < cfg.direct_limit) {
    Eigen::SimplicialLDLT<SpMat> ldlt(a);
    if (ldlt.info() != Eigen::Success) throw Error(ErrorKind::solver, "sparse factorization failed");
    x = ldlt.solve(rhs);
    res.direct = true;
  } else {
    Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg;
    const std::size_t max_it =
        cfg.max_iterations ? cfg.max_iterations : std::max<std::size_t>(1000, 10 * static_cast<std::size_t>(nfree));
    cg.setMaxIterations(static_cast<Eigen::Index>(max_it));
    cg.setTolerance(cfg.rel_tol);
    cg.compute(a);
    x = cg.solve(rhs);
    res.iterations = static_cast<std::size_t>(cg.iterations());
    if (cg.info() != Eigen::Success) {
      throw Error(ErrorKind::solver, "conjugate gradients did not reach relative residual " +
                                         std::to_string(cfg.rel_tol) + " in " + std::to_string(max_it) +
                                         " iterations");
    }
  }
  const double rn = rhs.norm();
  res.residual = (a * x - rhs).norm() / (rn > 0.0 ? rn : 1.0);
  for (Index i = 0; i < n; ++i) {
    if (slot[i] >= 0) res.f[i] = x[slot[i]];
  }
  return res;
}

}  // namespace netpot
