#include "hubnet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hubnet {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',' || ch == '\t' || ch == ' ' || ch == ';') {
      if (!current.empty()) fields.push_back(std::move(current));
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  if (!current.empty()) fields.push_back(std::move(current));
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Eigen::MatrixXd read_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "' for reading");

  std::vector<std::vector<double>> rows;
  std::string line;
  long line_number = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.empty()) continue;

    std::vector<double> row;
    row.reserve(fields.size());
    bool numeric = true;
    for (const std::string& f : fields) {
      double v;
      if (!parse_double(f, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (first_content_line) {
        first_content_line = false;  // header row
        continue;
      }
      throw InvalidInput("non-numeric cell at line " + std::to_string(line_number) + " of '" +
                         path + "'");
    }
    first_content_line = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InvalidInput("ragged row at line " + std::to_string(line_number) + " of '" + path +
                         "': expected " + std::to_string(rows.front().size()) + " fields, got " +
                         std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInput("no numeric rows in '" + path + "'");

  Eigen::MatrixXd x(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) x(i, j) = rows[i][j];
  }
  return x;
}

Eigen::MatrixXd read_binary_data(const std::string& path) {
  Eigen::MatrixXd x = read_data(path);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j) != 0.0 && x(i, j) != 1.0) {
        throw InvalidInput("entry at row " + std::to_string(i + 1) + ", column " +
                           std::to_string(j + 1) + " of '" + path + "' is not 0 or 1");
      }
    }
  }
  return x;
}

void write_matrix_tsv(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << '\t';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXd read_matrix_tsv(const std::string& path) { return read_data(path); }

void write_edges_tsv(const std::string& path, const SymmetricMatrix& theta) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  const int p = theta.dim();
  for (int j = 0; j < p; ++j) {
    for (int k = j + 1; k < p; ++k) {
      if (std::abs(theta(j, k)) > kZeroTol) {
        out << (j + 1) << '\t' << (k + 1) << '\t' << format_double(theta(j, k)) << '\n';
      }
    }
  }
}

void write_hubs_txt(const std::string& path, const std::vector<int>& hubs) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  for (int h : hubs) out << (h + 1) << '\n';
}

Eigen::MatrixXd standardize_columns(const Eigen::MatrixXd& x) {
  if (x.rows() < 2) throw InvalidInput("standardize_columns: need at least 2 rows");
  Eigen::MatrixXd out = x;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double mean = x.col(j).mean();
    const double sd = std::sqrt((x.col(j).array() - mean).square().sum() /
                                static_cast<double>(x.rows() - 1));
    if (sd > 0.0) out.col(j) /= sd;
  }
  return out;
}

SymmetricMatrix covariance_matrix(const Eigen::MatrixXd& x) {
  if (x.rows() < 1) throw InvalidInput("covariance_matrix: need at least 1 row");
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  return SymmetricMatrix((centered.transpose() * centered) / static_cast<double>(x.rows()));
}

}  // namespace hubnet
