#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hubnet/matrix.hpp"

namespace hubnet {

// Reads a rectangular comma/tab/whitespace-delimited numeric file. A
// non-numeric first row is treated as a header and skipped. Ragged rows and
// non-numeric cells raise InvalidInput naming the offending line.
Eigen::MatrixXd read_data(const std::string& path);

// Requires every entry to be exactly 0 or 1.
Eigen::MatrixXd read_binary_data(const std::string& path);

// Tab-delimited matrix, one row per line, shortest round-trip decimals.
void write_matrix_tsv(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_tsv(const std::string& path);

// "j<TAB>j'<TAB>weight" rows for |theta_jj'| > 1e-5, j < j', 1-based indices.
void write_edges_tsv(const std::string& path, const SymmetricMatrix& theta);

// One 1-based node index per line.
void write_hubs_txt(const std::string& path, const std::vector<int>& hubs);

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Column standardization (unit sample sd, divisor n-1; columns are scaled,
// not centered) and the maximum-likelihood covariance (centered, divisor n).
Eigen::MatrixXd standardize_columns(const Eigen::MatrixXd& x);
SymmetricMatrix covariance_matrix(const Eigen::MatrixXd& x);

}  // namespace hubnet
