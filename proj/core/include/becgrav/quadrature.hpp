#pragma once

#include <functional>

namespace becgrav::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 2000;
};

// Globally adaptive Gauss-Kronrod (7/15) on a finite interval.
// Throws NumericError when the tolerance cannot be met within max_intervals.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

// Convenience wrapper returning only the value.
double integral(const std::function<double(double)>& f, double a, double b,
                double rel_tol = 1e-10, double abs_tol = 0.0);

}  // namespace becgrav::quad
