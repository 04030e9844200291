#include "dcecon/qp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "dcecon/error.hpp"

namespace dcecon {

namespace {

double max_abs(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s = std::max(s, norm_inf(m.row(i)));
  return s;
}

// Diagonally pivoted symmetric elimination; a negative pivot or a non-zero
// remainder after the positive pivots run out means H is indefinite.
bool is_positive_semidefinite(Matrix h, double rel_tol) {
  const std::size_t n = h.rows();
  const double tol = rel_tol * std::max(max_abs(h), 1e-300);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && h(i, i) > best) {
        best = h(i, i);
        p = i;
      }
    if (best < -tol) return false;
    if (best <= tol) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && std::abs(h(i, j)) > tol) return false;
      return true;
    }
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const double f = h(i, p) / h(p, p);
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) h(i, j) -= f * h(p, j);
    }
  }
  return true;
}

struct Tolerances {
  double dual;
  double feasibility;
};

Tolerances tolerances_for(const QuadraticProgram& qp) {
  const double data_scale =
      std::max({1.0, max_abs(qp.H), norm_inf(qp.f), max_abs(qp.C), norm_inf(qp.b),
                max_abs(qp.C_eq), norm_inf(qp.b_eq)});
  return {1e-10 * data_scale, 1e-10 * std::max({1.0, norm_inf(qp.b), norm_inf(qp.b_eq)})};
}

// Solves the equality-constrained subproblem for every candidate working set
// and keeps the best point whose multipliers and slacks have the right signs.
std::optional<QpSolution> enumerate_active_sets(const QuadraticProgram& qp) {
  const std::size_t n = qp.dimension();
  const std::size_t m = qp.C.rows();
  const std::size_t p = qp.C_eq.rows();
  const Tolerances tol = tolerances_for(qp);

  std::optional<QpSolution> best;
  const std::uint32_t limit = std::uint32_t{1} << m;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const auto w = static_cast<std::size_t>(std::popcount(mask));
    if (w > n) continue;

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint32_t{1} << i)) active.push_back(i);

    const std::size_t size = n + w + p;
    Matrix kkt(size, size);
    Vector rhs(size, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) kkt(i, j) = 2.0 * qp.H(i, j);
      rhs[i] = -qp.f[i];
    }
    for (std::size_t k = 0; k < w; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        kkt(n + k, j) = qp.C(active[k], j);
        kkt(j, n + k) = qp.C(active[k], j);
      }
      rhs[n + k] = qp.b[active[k]];
    }
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        kkt(n + w + k, j) = qp.C_eq(k, j);
        kkt(j, n + w + k) = qp.C_eq(k, j);
      }
      rhs[n + w + k] = qp.b_eq[k];
    }

    const SolveResult sol = solve_complete_pivot(std::move(kkt), std::move(rhs));
    if (!sol.consistent) continue;

    bool ok = true;
    QpSolution cand;
    cand.x.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
    cand.lambda.assign(m, 0.0);
    for (std::size_t k = 0; k < w && ok; ++k) {
      const double l = sol.x[n + k];
      if (l < -tol.dual) ok = false;
      cand.lambda[active[k]] = std::max(l, 0.0);
    }
    if (!ok) continue;
    cand.mu.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(n + w), sol.x.end());

    for (std::size_t i = 0; i < m && ok; ++i) {
      if (dot(qp.C.row(i), cand.x) - qp.b[i] > tol.feasibility) ok = false;
    }
    for (std::size_t i = 0; i < p && ok; ++i) {
      if (std::abs(dot(qp.C_eq.row(i), cand.x) - qp.b_eq[i]) > tol.feasibility) ok = false;
    }
    if (!ok) continue;

    cand.objective = qp_objective(qp, cand.x);
    cand.active_set = std::move(active);
    if (!best || cand.objective < best->objective) best = std::move(cand);
  }
  return best;
}

}  // namespace

void QuadraticProgram::validate() const {
  const std::size_t n = f.size();
  detail::require(n > 0, ErrorCode::parameter, "QP has no variables");
  detail::require(H.rows() == n && H.cols() == n, ErrorCode::parameter,
                  "H must be n x n with n = size of f");
  detail::require(C.rows() == b.size() && (C.rows() == 0 || C.cols() == n),
                  ErrorCode::parameter, "inequality constraint sizes disagree");
  detail::require(C_eq.rows() == b_eq.size() && (C_eq.rows() == 0 || C_eq.cols() == n),
                  ErrorCode::parameter, "equality constraint sizes disagree");
  detail::require(C.rows() <= kMaxInequalities, ErrorCode::parameter,
                  "too many inequality constraints for active-set enumeration");
  detail::require(C_eq.rows() <= n, ErrorCode::parameter, "more equalities than variables");
  const double scale = std::max(max_abs(H), 1e-300);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      detail::require(std::abs(H(i, j) - H(j, i)) <= 1e-12 * scale, ErrorCode::parameter,
                      "H must be symmetric");
  detail::require(is_positive_semidefinite(H, 1e-12), ErrorCode::parameter,
                  "H must be positive semidefinite");
}

bool KktCertificate::satisfied(double stationarity_tol, double complementarity_tol,
                               double feasibility_tol) const {
  return stationarity <= stationarity_tol && dual_feasibility == 0.0 &&
         complementarity <= complementarity_tol && primal_feasibility <= feasibility_tol &&
         equality_residual <= feasibility_tol;
}

double qp_objective(const QuadraticProgram& qp, std::span<const double> x) {
  const Vector hx = qp.H * x;
  return dot(x, hx) + dot(qp.f, x);
}

KktCertificate kkt_certificate(const QuadraticProgram& qp, std::span<const double> x,
                               std::span<const double> lambda, std::span<const double> mu) {
  const std::size_t n = qp.dimension();
  Vector grad = qp.H * x;
  for (std::size_t i = 0; i < n; ++i) grad[i] = 2.0 * grad[i] + qp.f[i];
  for (std::size_t k = 0; k < qp.C.rows(); ++k)
    for (std::size_t j = 0; j < n; ++j) grad[j] += qp.C(k, j) * lambda[k];
  for (std::size_t k = 0; k < qp.C_eq.rows(); ++k)
    for (std::size_t j = 0; j < n; ++j) grad[j] += qp.C_eq(k, j) * mu[k];

  KktCertificate c;
  c.stationarity = norm2(grad);
  for (std::size_t k = 0; k < qp.C.rows(); ++k) {
    const double slack = dot(qp.C.row(k), x) - qp.b[k];
    c.dual_feasibility = std::max(c.dual_feasibility, -lambda[k]);
    c.complementarity = std::max(c.complementarity, std::abs(lambda[k] * slack));
    c.primal_feasibility = std::max(c.primal_feasibility, slack);
  }
  for (std::size_t k = 0; k < qp.C_eq.rows(); ++k) {
    c.equality_residual =
        std::max(c.equality_residual, std::abs(dot(qp.C_eq.row(k), x) - qp.b_eq[k]));
  }
  return c;
}

QpSolution qp_solve(const QuadraticProgram& qp) {
  qp.validate();

  std::optional<QpSolution> sol = enumerate_active_sets(qp);
  if (!sol) {
    // Minimum-norm point of the feasible set; a strictly convex problem has
    // a KKT point whenever the constraints are consistent.
    QuadraticProgram phase1 = qp;
    phase1.H = Matrix::identity(qp.dimension());
    phase1.f.assign(qp.dimension(), 0.0);
    if (!enumerate_active_sets(phase1)) {
      detail::fail(ErrorCode::infeasible, "QP constraints are infeasible");
    }
    detail::fail(ErrorCode::unbounded, "QP objective is unbounded below on the feasible set");
  }

  sol->certificate = kkt_certificate(qp, sol->x, sol->lambda, sol->mu);
  const double scale = std::max({1.0, max_abs(qp.H) * norm_inf(sol->x), norm_inf(qp.f)});
  const Tolerances tol = tolerances_for(qp);
  if (!sol->certificate.satisfied(1e-8 * scale, 1e-8 * scale, tol.feasibility)) {
    detail::fail(ErrorCode::degenerate, "QP solution failed its KKT certificate");
  }
  return *sol;
}

}  // namespace dcecon
