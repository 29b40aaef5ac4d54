#pragma once

#include <stdexcept>
#include <string>

namespace redpoctor {

/// Base class for every error raised by the release engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -- stream validation ------------------------------------------------------

class NonConsecutiveDays : public Error {
 public:
  explicit NonConsecutiveDays(int day)
      : Error("stream days are not consecutive at day " + std::to_string(day)),
        day_(day) {}
  int day() const { return day_; }

 private:
  int day_;
};

class RaggedBins : public Error {
 public:
  explicit RaggedBins(int day)
      : Error("bin count differs from the rest of the stream at day " +
              std::to_string(day)),
        day_(day) {}
  int day() const { return day_; }

 private:
  int day_;
};

class NegativeCount : public Error {
 public:
  explicit NegativeCount(int day)
      : Error("negative or non-finite bin value at day " + std::to_string(day)),
        day_(day) {}
  int day() const { return day_; }

 private:
  int day_;
};

// -- budget ledger -----------------------------------------------------------

class WindowBudgetExceeded : public Error {
 public:
  WindowBudgetExceeded(int day, double attempted_sum)
      : Error("window budget exceeded at day " + std::to_string(day) +
              " (attempted sum " + std::to_string(attempted_sum) + ")"),
        day_(day),
        attempted_sum_(attempted_sum) {}
  int day() const { return day_; }
  double attempted_sum() const { return attempted_sum_; }

 private:
  int day_;
  double attempted_sum_;
};

class DuplicateDay : public Error {
 public:
  explicit DuplicateDay(int day)
      : Error("spend already recorded for day " + std::to_string(day)),
        day_(day) {}
  int day() const { return day_; }

 private:
  int day_;
};

// -- mechanism ---------------------------------------------------------------

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class NonPositiveBudget : public Error {
 public:
  using Error::Error;
};

class Uninitialized : public Error {
 public:
  using Error::Error;
};

// -- reporting / io -----------------------------------------------------------

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownBaseline : public Error {
 public:
  explicit UnknownBaseline(const std::string& name)
      : Error("unknown baseline: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace redpoctor
