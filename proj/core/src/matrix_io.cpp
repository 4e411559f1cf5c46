#include "gaplra/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "gaplra/errors.hpp"

namespace gaplra {

namespace {

constexpr std::int64_t kDimLimit = 2147483647;  // 2^31 - 1

struct LineParser {
  std::string text;
  long line_no = 0;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message + " (line " + std::to_string(line_no) + ", column " +
                         std::to_string(static_cast<long>(pos) + 1) + ")",
                     line_no, static_cast<long>(pos) + 1);
  }

  std::int64_t parse_int(const char* what) {
    skip_spaces();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(std::string("expected integer ") + what);
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::exception&) {
      pos = start;
      fail(std::string("integer out of range for ") + what);
    }
  }

  double parse_real(const char* what) {
    skip_spaces();
    const std::size_t start = pos;
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(text.substr(start), &consumed);
    } catch (const std::exception&) {
      fail(std::string("expected real value for ") + what);
    }
    pos = start + consumed;
    if (consumed == 0) fail(std::string("expected real value for ") + what);
    return value;
  }
};

bool next_content_line(std::istream& in, LineParser& lp, bool allow_comments) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++lp.line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i == raw.size()) continue;
    if (allow_comments && raw[i] == '%') continue;
    lp.text = raw;
    lp.pos = 0;
    return true;
  }
  return false;
}

}  // namespace

SparseColumnsMatrix read_matrix_market(std::istream& in) {
  LineParser lp;
  std::string header;
  long header_line = 0;
  {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lp.line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty()) continue;
      header = raw;
      header_line = lp.line_no;
      break;
    }
  }
  if (header.empty()) throw ParseError("empty Matrix Market stream", 1, 1);
  {
    std::istringstream hs(header);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    std::transform(object.begin(), object.end(), object.begin(), ::tolower);
    std::transform(format.begin(), format.end(), format.begin(), ::tolower);
    std::transform(field.begin(), field.end(), field.begin(), ::tolower);
    std::transform(symmetry.begin(), symmetry.end(), symmetry.begin(), ::tolower);
    if (banner != "%%MatrixMarket" || object != "matrix" || format != "coordinate" ||
        field != "real" || symmetry != "general") {
      throw ParseError(
          "unsupported Matrix Market header, expected "
          "'%%MatrixMarket matrix coordinate real general'",
          header_line, 1);
    }
  }

  if (!next_content_line(in, lp, /*allow_comments=*/true)) {
    throw ParseError("missing Matrix Market size line", lp.line_no + 1, 1);
  }
  const std::int64_t d = lp.parse_int("row count");
  const std::int64_t n = lp.parse_int("column count");
  const std::int64_t nnz = lp.parse_int("nonzero count");
  if (d < 0 || n < 0 || d > kDimLimit || n > kDimLimit) {
    lp.fail("matrix dimensions out of supported range");
  }
  if (nnz < 0) lp.fail("negative nonzero count");
  if (!lp.at_end()) lp.fail("trailing characters on size line");

  std::vector<std::vector<SparseEntry>> cols(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < nnz; ++k) {
    if (!next_content_line(in, lp, /*allow_comments=*/true)) {
      throw ParseError("expected " + std::to_string(nnz) + " entries, got " +
                           std::to_string(k),
                       lp.line_no + 1, 1);
    }
    const std::int64_t i = lp.parse_int("row index");
    const std::int64_t j = lp.parse_int("column index");
    const double v = lp.parse_real("entry");
    if (i < 1 || i > d) lp.fail("row index out of range");
    if (j < 1 || j > n) lp.fail("column index out of range");
    if (!std::isfinite(v)) lp.fail("non-finite entry");
    if (!lp.at_end()) lp.fail("trailing characters on entry line");
    cols[static_cast<std::size_t>(j - 1)].push_back(
        {static_cast<int>(i - 1), v});
  }

  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    std::sort(col.begin(), col.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    for (std::size_t t = 1; t < col.size(); ++t) {
      if (col[t].index == col[t - 1].index) {
        throw ParseError("duplicate entry at row " + std::to_string(col[t].index + 1) +
                             ", column " + std::to_string(j + 1),
                         lp.line_no, 1);
      }
    }
  }
  return SparseColumnsMatrix(static_cast<int>(d), static_cast<int>(n), std::move(cols));
}

SparseColumnsMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseColumnsMatrix& x) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << x.d() << " " << x.n() << " " << x.nnz() << "\n";
  out.precision(17);
  for (int j = 0; j < x.n(); ++j) {
    for (const SparseEntry& e : x.column(j)) {
      out << (e.index + 1) << " " << (j + 1) << " " << e.value << "\n";
    }
  }
}

void write_matrix_market_file(const std::string& path, const SparseColumnsMatrix& x) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_matrix_market(out, x);
  if (!out) throw IoError("write to '" + path + "' failed");
}

DenseMatrix read_dense_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  LineParser lp;
  while (next_content_line(in, lp, /*allow_comments=*/false)) {
    std::vector<double> row;
    while (true) {
      row.push_back(lp.parse_real("CSV value"));
      lp.skip_spaces();
      if (lp.pos < lp.text.size() && lp.text[lp.pos] == ',') {
        ++lp.pos;
        continue;
      }
      break;
    }
    if (!lp.at_end()) lp.fail("trailing characters on CSV row");
    if (!rows.empty() && row.size() != rows.front().size()) {
      lp.fail("inconsistent column count");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV stream", 1, 1);
  DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  m.check_finite("read_dense_csv");
  return m;
}

DenseMatrix read_dense_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_dense_csv(in);
}

void write_dense_csv(std::ostream& out, const DenseMatrix& m) {
  out.precision(17);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ",";
      out << m(i, j);
    }
    out << "\n";
  }
}

void write_dense_csv_file(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_dense_csv(out, m);
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace gaplra
