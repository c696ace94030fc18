#pragma once

#include <stdexcept>
#include <string>

namespace dw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// bad user input or inconsistent options
class ConfigError : public Error {
 public:
  using Error::Error;
};

// non-finite values, failed quadrature, bad fits
class NumericError : public Error {
 public:
  using Error::Error;
};

// 1 + v vanished somewhere on the evaluation grid
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, int grid_index, double x);
  int grid_index() const noexcept { return index_; }
  double x() const noexcept { return x_; }

 private:
  int index_;
  double x_;
};

// flattening map lost injectivity (J too small)
class GeometryError : public Error {
 public:
  GeometryError(const std::string& what, double margin);
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

// Picard iteration did not contract
class ContractionError : public Error {
 public:
  ContractionError(const std::string& what, int iterations, double last_increment);
  int iterations() const noexcept { return iterations_; }
  double last_increment() const noexcept { return last_; }

 private:
  int iterations_;
  double last_;
};

// cached data does not belong to the state it is used with
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dw
