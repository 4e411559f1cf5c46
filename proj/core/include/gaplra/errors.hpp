#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gaplra {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (dimension mismatch,
// parameter out of range, non-orthonormal input, ...).
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

// QR (or an operation built on it) met a numerically rank-deficient input.
class RankDeficient : public Error {
 public:
  RankDeficient(const std::string& what, int column)
      : Error(what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

// Exact dense decompositions are restricted to desk-scale inputs.
class OracleScale : public Error {
 public:
  explicit OracleScale(const std::string& what) : Error(what) {}
};

// The shifted matrix lambda*I - X*X^T is not positive definite.
class IndefiniteShift : public Error {
 public:
  explicit IndefiniteShift(const std::string& what) : Error(what) {}
};

// An iterative solver hit its epoch/iteration cap without converging.
class SolverStalled : public Error {
 public:
  SolverStalled(const std::string& what, std::vector<double> residual_history)
      : Error(what), residual_history_(std::move(residual_history)) {}
  const std::vector<double>& residual_history() const {
    return residual_history_;
  }

 private:
  std::vector<double> residual_history_;
};

// The inverse-gap estimate fed to the additive gap detector does not satisfy
// the tuned-shift window [delta/27, delta/5].
class ShiftOutOfRange : public Error {
 public:
  ShiftOutOfRange(const std::string& what, double estimate, double delta)
      : Error(what), estimate_(estimate), delta_(delta) {}
  double estimate() const { return estimate_; }
  double delta() const { return delta_; }

 private:
  double estimate_;
  double delta_;
};

// Shift tuning failed to land in the target window within its step cap.
class ShiftTuningStalled : public Error {
 public:
  ShiftTuningStalled(const std::string& what,
                     std::vector<std::pair<double, double>> history)
      : Error(what), history_(std::move(history)) {}
  // (lambda, inverse-gap estimate) per tuning step.
  const std::vector<std::pair<double, double>>& history() const {
    return history_;
  }

 private:
  std::vector<std::pair<double, double>> history_;
};

// The gap-budget search exhausted its floor without certifying any delta.
class NoUsableGap : public Error {
 public:
  explicit NoUsableGap(const std::string& what) : Error(what) {}
};

// The adaptive driver stopped making progress (duplicated eigendirection or
// more outer iterations than target indices).
class DegenerateProgress : public Error {
 public:
  explicit DegenerateProgress(const std::string& what) : Error(what) {}
};

// Malformed input file; carries 1-based line/column of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line, long column)
      : Error(what), line_(line), column_(column) {}
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace gaplra
