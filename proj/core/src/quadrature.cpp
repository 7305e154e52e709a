#include "becgrav/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "becgrav/errors.hpp"

namespace becgrav::quad {
namespace {

// Kronrod abscissae (descending), Kronrod weights, and the Gauss weights of
// the embedded 7-point rule (attached to the odd-indexed abscissae).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kron += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s{a, b, kron * h, std::abs((kron - gauss) * h), abs_sum * std::abs(h)};
  if (!std::isfinite(s.value)) {
    std::ostringstream msg;
    msg << "quadrature: non-finite integrand on [" << a << ", " << b << "]";
    throw NumericError(msg.str());
  }
  return s;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("quadrature: interval bounds must be finite");
  }
  Result out;
  if (a == b) return out;

  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  double total_abs = first.abs_value;
  out.evaluations = 15;

  const double eps = std::numeric_limits<double>::epsilon();
  auto converged = [&] {
    const double target = std::max({opts.abs_tol, opts.rel_tol * std::abs(total),
                                    50.0 * eps * total_abs});
    return total_err <= target;
  };

  while (!converged()) {
    if (static_cast<int>(heap.size()) >= opts.max_intervals) {
      std::ostringstream msg;
      msg << "quadrature: no convergence on [" << a << ", " << b << "] after "
          << heap.size() << " intervals (estimate " << total << ", error "
          << total_err << ")";
      throw NumericError(msg.str());
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the segments to shed accumulated cancellation in `total`.
  double sum = 0.0;
  double err = 0.0;
  out.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = err;
  return out;
}

double integral(const std::function<double(double)>& f, double a, double b,
                double rel_tol, double abs_tol) {
  Options opts;
  opts.rel_tol = rel_tol;
  opts.abs_tol = abs_tol;
  return integrate(f, a, b, opts).value;
}

}  // namespace becgrav::quad
