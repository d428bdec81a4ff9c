#pragma once

#include <stdexcept>
#include <string>

namespace drnn {

// Malformed or inconsistent external data (files, annotations, CSV rows).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric failure: singular solve, non-finite loss, undefined score.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

enum class Activation {
  Tanh,
  Logistic,
  Identity,  // test hook, not a user-facing choice
};

enum class WeightMode {
  Shared,      // one weight bank, past unrolled copies reuse it
  PerInstant,  // each retained instant carries its own visible+hidden bank
};

double activate(Activation kind, double a);

// f'(a) as a function of the pre-activation a.
double activation_derivative(Activation kind, double a);

// f'(a) recovered from the unit output y = f(a); avoids storing pre-activations.
double activation_derivative_from_output(Activation kind, double y);

std::string to_string(Activation kind);
std::string to_string(WeightMode mode);
Activation activation_from_string(const std::string& s);
WeightMode weight_mode_from_string(const std::string& s);

}  // namespace drnn
