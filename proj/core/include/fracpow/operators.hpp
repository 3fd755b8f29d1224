#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fracpow/types.hpp"

namespace fracpow {

/// Per-solve diagnostics. Direct backends report zero iterations.
struct SolveStats {
    int iterations = 0;
    double residual = 0.0;
};

/// Abstraction of a symmetric positive definite operator L exposing the
/// shifted solve (s I + L)^-1 v. The spectrum certificate is caller-supplied:
/// sigma(L) is contained in [spectrum_lower_bound, +inf).
///
/// Implementations must be safe to share read-only across threads; per-term
/// solves of apply_fracpow run concurrently.
class ShiftedSolveOperator {
public:
    virtual ~ShiftedSolveOperator() = default;

    virtual Eigen::Index dim() const = 0;
    virtual double spectrum_lower_bound() const = 0;

    /// Solves (s I + L) x = rhs for s > 0. Throws SolveError on breakdown.
    virtual Eigen::VectorXd solve_shifted(double s, const Eigen::VectorXd& rhs,
                                          SolveStats* stats = nullptr) const = 0;
};

/// Diagonal operator; shifted solves are exact componentwise divisions.
class DiagonalOperator final : public ShiftedSolveOperator {
public:
    explicit DiagonalOperator(Eigen::VectorXd eigenvalues);

    Eigen::Index dim() const override { return eigenvalues_.size(); }
    double spectrum_lower_bound() const override { return lower_bound_; }
    Eigen::VectorXd solve_shifted(double s, const Eigen::VectorXd& rhs,
                                  SolveStats* stats = nullptr) const override;

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

private:
    Eigen::VectorXd eigenvalues_;
    double lower_bound_;
};

/// The synthetic spectrum diag(1^8, 2^8, ..., 100^8), spanning [1, 1e16].
DiagonalOperator artificial_operator();

/// Dense symmetric operator backed by one Cholesky factorization per distinct
/// shift. Symmetry is verified to 1e-12 relative on construction.
/// Factorizations are cached; the cache is mutex-guarded so concurrent
/// apply_fracpow workers can share the operator.
class DenseSPDOperator final : public ShiftedSolveOperator {
public:
    DenseSPDOperator(Eigen::MatrixXd matrix, double spectrum_lower_bound);

    Eigen::Index dim() const override { return matrix_.rows(); }
    double spectrum_lower_bound() const override { return lower_bound_; }
    Eigen::VectorXd solve_shifted(double s, const Eigen::VectorXd& rhs,
                                  SolveStats* stats = nullptr) const override;

    const Eigen::MatrixXd& matrix() const { return matrix_; }

private:
    using Factorization = Eigen::LLT<Eigen::MatrixXd>;
    std::shared_ptr<const Factorization> factorization(double s) const;

    Eigen::MatrixXd matrix_;
    double lower_bound_;
    mutable std::mutex cache_mutex_;
    mutable std::map<double, std::shared_ptr<const Factorization>> cache_;
};

/// Sparse symmetric operator solved by unpreconditioned conjugate gradients.
/// A solve succeeds only when the true relative residual reaches
/// cg_tolerance within cg_max_iterations; otherwise SolveError.
class IterativeOperator final : public ShiftedSolveOperator {
public:
    IterativeOperator(Eigen::SparseMatrix<double> matrix, double spectrum_lower_bound,
                      double cg_tolerance, int cg_max_iterations);

    Eigen::Index dim() const override { return matrix_.rows(); }
    double spectrum_lower_bound() const override { return lower_bound_; }
    Eigen::VectorXd solve_shifted(double s, const Eigen::VectorXd& rhs,
                                  SolveStats* stats = nullptr) const override;

    double cg_tolerance() const { return cg_tolerance_; }
    int cg_max_iterations() const { return cg_max_iterations_; }

private:
    Eigen::SparseMatrix<double> matrix_;
    double lower_bound_;
    double cg_tolerance_;
    int cg_max_iterations_;
};

/// Diagnostics for one applied (nonzero-weight) term.
struct TermSolveRecord {
    int index;  // quadrature index l
    SolveStats stats;
};

struct FracpowResult {
    Eigen::VectorXd vector;
    int terms_applied = 0;  // <= rule size; underflowed terms are skipped
    std::vector<TermSolveRecord> solver_stats;
};

/// Applies a rule to an operator: sum_l c_l (s_l I + L)^-1 g.
///
/// Per-term solves run concurrently (bounded by FRACPOW_THREADS); the final
/// accumulation is performed sequentially in fixed index order with
/// compensated summation, so results are bit-reproducible regardless of the
/// worker count. Requires spectrum_lower_bound >= 1 and g.size() == dim.
FracpowResult apply_fracpow(const QuadratureRule& rule, const ShiftedSolveOperator& op,
                            const Eigen::VectorXd& g);

using RuleBuilder = std::function<QuadratureRule(const FractionalOrder&)>;

/// Fractional power for an operator whose spectrum certificate m may be
/// below 1, via L^-alpha = m^-alpha (L/m)^-alpha. The rule from rule_builder
/// is applied to L/m, whose spectrum lies in [1, +inf).
Eigen::VectorXd scaled_fracpow(const ShiftedSolveOperator& op, const FractionalOrder& order,
                               const RuleBuilder& rule_builder, const Eigen::VectorXd& g);

/// max over the eigenvalues of |lambda^-alpha - eval_rule(lambda)|. For a
/// self-adjoint diagonal operator this is exactly the operator-norm error.
double operator_error_sup(const QuadratureRule& rule, const DiagonalOperator& op);

/// Dense eigendecomposition reference: sum_j mu_j^-alpha <g, phi_j> phi_j.
/// Intended as a test-side reference at desk scale (dim <= 2000).
Eigen::VectorXd spectral_oracle(const DenseSPDOperator& op, const FractionalOrder& order,
                                const Eigen::VectorXd& g);

}  // namespace fracpow
