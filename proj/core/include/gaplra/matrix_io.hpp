#pragma once

#include <iosfwd>
#include <string>

#include "gaplra/dense_matrix.hpp"
#include "gaplra/sparse_matrix.hpp"

namespace gaplra {

// Matrix Market "coordinate real general" format. Dimensions are limited to
// 2^31 - 1. Parse failures throw ParseError with 1-based line/column.
SparseColumnsMatrix read_matrix_market(std::istream& in);
SparseColumnsMatrix read_matrix_market_file(const std::string& path);
void write_matrix_market(std::ostream& out, const SparseColumnsMatrix& x);
void write_matrix_market_file(const std::string& path, const SparseColumnsMatrix& x);

// Dense CSV: one row per line, comma-separated values.
DenseMatrix read_dense_csv(std::istream& in);
DenseMatrix read_dense_csv_file(const std::string& path);
void write_dense_csv(std::ostream& out, const DenseMatrix& m);
void write_dense_csv_file(const std::string& path, const DenseMatrix& m);

}  // namespace gaplra
