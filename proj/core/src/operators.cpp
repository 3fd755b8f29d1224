#include "fracpow/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "fracpow/kahan.hpp"
#include "fracpow/kernel.hpp"
#include "fracpow/parallel.hpp"

namespace fracpow {

namespace {

void check_symmetric(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols())
        throw DimensionError("operator matrix must be square");
    const double scale = a.cwiseAbs().maxCoeff();
    const double gap = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (gap > 1e-12 * scale)
        throw SymmetryError("matrix is not symmetric to 1e-12 relative");
}

}  // namespace

DiagonalOperator::DiagonalOperator(Eigen::VectorXd eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
    if (eigenvalues_.size() == 0)
        throw ParameterError("diagonal operator needs at least one eigenvalue");
    lower_bound_ = eigenvalues_.minCoeff();
    if (!(lower_bound_ > 0.0))
        throw ParameterError("diagonal operator must be positive definite");
}

Eigen::VectorXd DiagonalOperator::solve_shifted(double s, const Eigen::VectorXd& rhs,
                                                SolveStats* stats) const {
    if (rhs.size() != eigenvalues_.size())
        throw DimensionError("right-hand side dimension mismatch");
    if (stats)
        *stats = {};
    return rhs.array() / (eigenvalues_.array() + s);
}

DiagonalOperator artificial_operator() {
    Eigen::VectorXd eig(100);
    for (int k = 1; k <= 100; ++k)
        eig[k - 1] = std::pow(static_cast<double>(k), 8.0);
    return DiagonalOperator(std::move(eig));
}

DenseSPDOperator::DenseSPDOperator(Eigen::MatrixXd matrix, double spectrum_lower_bound)
    : matrix_(std::move(matrix)), lower_bound_(spectrum_lower_bound) {
    check_symmetric(matrix_);
}

std::shared_ptr<const DenseSPDOperator::Factorization>
DenseSPDOperator::factorization(double s) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(s);
        if (it != cache_.end())
            return it->second;
    }
    Eigen::MatrixXd shifted = matrix_;
    shifted.diagonal().array() += s;
    auto llt = std::make_shared<Factorization>(shifted);
    if (llt->info() != Eigen::Success)
        throw SolveError("Cholesky factorization failed", s);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return cache_.emplace(s, std::move(llt)).first->second;
}

Eigen::VectorXd DenseSPDOperator::solve_shifted(double s, const Eigen::VectorXd& rhs,
                                                SolveStats* stats) const {
    if (rhs.size() != matrix_.rows())
        throw DimensionError("right-hand side dimension mismatch");
    Eigen::VectorXd x = factorization(s)->solve(rhs);
    if (stats) {
        stats->iterations = 0;
        stats->residual = (rhs - (matrix_ * x + s * x)).norm() /
                          (rhs.norm() > 0.0 ? rhs.norm() : 1.0);
    }
    return x;
}

IterativeOperator::IterativeOperator(Eigen::SparseMatrix<double> matrix,
                                     double spectrum_lower_bound, double cg_tolerance,
                                     int cg_max_iterations)
    : matrix_(std::move(matrix)),
      lower_bound_(spectrum_lower_bound),
      cg_tolerance_(cg_tolerance),
      cg_max_iterations_(cg_max_iterations) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionError("operator matrix must be square");
    if (!(cg_tolerance_ > 0.0))
        throw ParameterError("cg tolerance must be positive");
    if (cg_max_iterations_ < 1)
        throw ParameterError("cg iteration budget must be >= 1");
    matrix_.makeCompressed();
}

Eigen::VectorXd IterativeOperator::solve_shifted(double s, const Eigen::VectorXd& rhs,
                                                 SolveStats* stats) const {
    if (rhs.size() != matrix_.rows())
        throw DimensionError("right-hand side dimension mismatch");
    const double rhs_norm = rhs.norm();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(rhs.size());
    if (rhs_norm == 0.0) {
        if (stats)
            *stats = {};
        return x;
    }

    auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        return matrix_ * v + s * v;
    };

    Eigen::VectorXd r = rhs;  // residual for x = 0
    Eigen::VectorXd p = r;
    double rs = r.squaredNorm();
    const double target = cg_tolerance_ * rhs_norm;

    for (int it = 1; it <= cg_max_iterations_; ++it) {
        const Eigen::VectorXd ap = apply(p);
        const double denom = p.dot(ap);
        if (!(denom > 0.0))
            throw SolveError("CG breakdown: operator not positive definite", s);
        const double step = rs / denom;
        x += step * p;
        r -= step * ap;
        double rs_next = r.squaredNorm();
        if (std::sqrt(rs_next) <= target) {
            // Accept only on the true residual; the recursive one can drift.
            Eigen::VectorXd true_r = rhs - apply(x);
            const double true_norm = true_r.norm();
            if (true_norm <= target) {
                if (stats) {
                    stats->iterations = it;
                    stats->residual = true_norm / rhs_norm;
                }
                return x;
            }
            r = std::move(true_r);
            p = r;
            rs_next = r.squaredNorm();
        } else {
            p = r + (rs_next / rs) * p;
        }
        rs = rs_next;
    }
    throw SolveError("CG did not reach the requested residual within " +
                         std::to_string(cg_max_iterations_) + " iterations",
                     s);
}

FracpowResult apply_fracpow(const QuadratureRule& rule, const ShiftedSolveOperator& op,
                            const Eigen::VectorXd& g) {
    if (op.spectrum_lower_bound() < 1.0)
        throw ParameterError(
            "spectrum certificate below 1; rescale via scaled_fracpow instead");
    if (g.size() != op.dim())
        throw DimensionError("vector dimension does not match the operator");

    std::vector<int> applied;
    applied.reserve(rule.terms.size());
    for (int l = -rule.M; l <= rule.N; ++l)
        if (rule.term(l).weight != 0.0)
            applied.push_back(l);

    std::vector<Eigen::VectorXd> contributions(applied.size());
    std::vector<TermSolveRecord> records(applied.size());
    parallel_for(applied.size(), [&](std::size_t i) {
        const int l = applied[i];
        const ResolventTerm& term = rule.term(l);
        SolveStats stats;
        contributions[i] = term.weight * op.solve_shifted(term.shift, g, &stats);
        records[i] = {l, stats};
    });

    // Sequential reduction in ascending index order, compensated per component.
    const Eigen::Index dim = op.dim();
    std::vector<KahanAccumulator> acc(static_cast<std::size_t>(dim));
    for (const Eigen::VectorXd& c : contributions)
        for (Eigen::Index j = 0; j < dim; ++j)
            acc[static_cast<std::size_t>(j)].add(c[j]);

    FracpowResult result;
    result.vector.resize(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        result.vector[j] = acc[static_cast<std::size_t>(j)].sum();
    result.terms_applied = static_cast<int>(applied.size());
    result.solver_stats = std::move(records);
    return result;
}

namespace {

// Adapter presenting L/m through the shifted solves of L:
// (s I + L/m)^-1 v = m (s m I + L)^-1 v.
class ScaledOperator final : public ShiftedSolveOperator {
public:
    ScaledOperator(const ShiftedSolveOperator& base, double m) : base_(base), m_(m) {}

    Eigen::Index dim() const override { return base_.dim(); }
    double spectrum_lower_bound() const override {
        return base_.spectrum_lower_bound() / m_;
    }
    Eigen::VectorXd solve_shifted(double s, const Eigen::VectorXd& rhs,
                                  SolveStats* stats) const override {
        return m_ * base_.solve_shifted(s * m_, rhs, stats);
    }

private:
    const ShiftedSolveOperator& base_;
    double m_;
};

}  // namespace

Eigen::VectorXd scaled_fracpow(const ShiftedSolveOperator& op, const FractionalOrder& order,
                               const RuleBuilder& rule_builder, const Eigen::VectorXd& g) {
    const double m = op.spectrum_lower_bound();
    if (!(m > 0.0))
        throw ParameterError("spectrum certificate must be positive");
    const ScaledOperator scaled(op, m);
    const QuadratureRule rule = rule_builder(order);
    const FracpowResult res = apply_fracpow(rule, scaled, g);
    return std::pow(m, -order.alpha) * res.vector;
}

double operator_error_sup(const QuadratureRule& rule, const DiagonalOperator& op) {
    double sup = 0.0;
    for (Eigen::Index i = 0; i < op.eigenvalues().size(); ++i) {
        const double lambda = op.eigenvalues()[i];
        const double err =
            std::fabs(std::pow(lambda, -rule.order.alpha) - eval_rule(rule, lambda));
        if (err > sup)
            sup = err;
    }
    return sup;
}

Eigen::VectorXd spectral_oracle(const DenseSPDOperator& op, const FractionalOrder& order,
                                const Eigen::VectorXd& g) {
    if (op.dim() > 2000)
        throw ParameterError("spectral reference is limited to dim <= 2000");
    if (g.size() != op.dim())
        throw DimensionError("vector dimension does not match the operator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix());
    if (solver.info() != Eigen::Success)
        throw OracleError("eigendecomposition failed");
    if (!(solver.eigenvalues().minCoeff() > 0.0))
        throw OracleError("matrix is not positive definite");
    const Eigen::VectorXd coeffs = solver.eigenvectors().transpose() * g;
    const Eigen::VectorXd scaled =
        coeffs.array() * solver.eigenvalues().array().pow(-order.alpha);
    return solver.eigenvectors() * scaled;
}

}  // namespace fracpow
