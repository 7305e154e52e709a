#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace becgrav {

// Multi-mode Gaussian state in quadrature form, ordering (x_0, p_0, x_1, p_1, ...)
// with x = (b + b^+)/sqrt2, p = (b - b^+)/(i sqrt2); vacuum covariance = I/2.
// Mode slots are 0-based. Every channel re-checks the uncertainty relation.
class GaussianState {
 public:
  static GaussianState vacuum(int modes);
  static GaussianState thermal(const std::vector<double>& occupations);

  int modes() const { return static_cast<int>(mean_.size() / 2); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }

  // D(alpha)
  void displace(int mode, std::complex<double> alpha);
  // S(xi) = exp(-(xi b^+2 - xi* b^2)/2), xi = r e^{i angle}
  void squeeze(int mode, double r, double angle = 0.0);
  // exp(-(xi b_a^+ b_b^+ - xi* b_a b_b)), xi = r e^{i angle}
  void two_mode_squeeze(int a, int b, double r, double angle = 0.0);
  // exp(theta (b_a^+ b_b - b_b^+ b_a))
  void beamsplitter(int a, int b, double theta);
  // exp(-i angle b^+ b)
  void rotate(int mode, double angle);

  // Heisenberg-picture map b_j -> sum_k mu_jk b_k + nu_jk b_k^+ on the listed slots.
  void apply_bogoliubov(const std::vector<int>& slots, const Eigen::MatrixXcd& mu,
                        const Eigen::MatrixXcd& nu);
  void apply_symplectic(const Eigen::MatrixXd& s);

  std::complex<double> amplitude(int mode) const;  // <b>
  double phonon_number(int mode) const;
  double coherent_number(int mode) const;
  double total_phonon_number() const;

  double min_symplectic_eigenvalue() const;
  double symmetry_defect() const;  // max |V - V^T|
  // Throws NumericError if the covariance is asymmetric or violates nu >= 1/2 - tol.
  void check_physical(double tol = 1e-9) const;

  // Sections: per-mode numbers, mean vector, covariance rows.
  void write_csv(std::ostream& os) const;

 private:
  explicit GaussianState(int modes);
  void require_slot(int mode) const;
  void apply_local(const std::vector<int>& slots, const Eigen::MatrixXd& s);

  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

// Real symplectic matrix for b_j -> mu_jk b_k + nu_jk b_k^+.
Eigen::MatrixXd bogoliubov_to_symplectic(const Eigen::MatrixXcd& mu, const Eigen::MatrixXcd& nu);

}  // namespace becgrav
