#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <string>

namespace fracpow {

/// Reads a Matrix Market file (coordinate or array format, real or integer
/// entries, general or symmetric storage) into a dense matrix. Symmetric
/// storage is expanded to both triangles. Throws IoError on malformed input
/// and for unsupported fields (complex, pattern, hermitian, skew-symmetric).
Eigen::MatrixXd load_matrix_market_dense(const std::string& path);

/// Same formats as load_matrix_market_dense, assembled sparse.
Eigen::SparseMatrix<double> load_matrix_market_sparse(const std::string& path);

/// Reads a whitespace-separated text vector, one value per line.
Eigen::VectorXd load_vector_text(const std::string& path);

/// Writes a vector as text, one value per line, round-trip exact.
void save_vector_text(const std::string& path, const Eigen::VectorXd& v);

}  // namespace fracpow
