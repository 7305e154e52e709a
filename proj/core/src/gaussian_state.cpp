#include "becgrav/gaussian_state.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "becgrav/errors.hpp"

namespace becgrav {

GaussianState::GaussianState(int modes) {
  if (modes < 1) throw DomainError("GaussianState: need at least one mode");
  mean_ = Eigen::VectorXd::Zero(2 * modes);
  cov_ = 0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
}

GaussianState GaussianState::vacuum(int modes) { return GaussianState(modes); }

GaussianState GaussianState::thermal(const std::vector<double>& occupations) {
  GaussianState s(static_cast<int>(occupations.size()));
  for (std::size_t i = 0; i < occupations.size(); ++i) {
    if (!(occupations[i] >= 0.0)) throw DomainError("GaussianState: occupation must be >= 0");
    s.cov_(2 * i, 2 * i) = occupations[i] + 0.5;
    s.cov_(2 * i + 1, 2 * i + 1) = occupations[i] + 0.5;
  }
  return s;
}

void GaussianState::require_slot(int mode) const {
  if (mode < 0 || mode >= modes()) {
    std::ostringstream msg;
    msg << "GaussianState: mode slot " << mode << " out of range [0, " << modes() << ")";
    throw DomainError(msg.str());
  }
}

Eigen::MatrixXd bogoliubov_to_symplectic(const Eigen::MatrixXcd& mu, const Eigen::MatrixXcd& nu) {
  const Eigen::Index n = mu.rows();
  Eigen::MatrixXd s(2 * n, 2 * n);
  const Eigen::MatrixXcd sum = mu + nu;
  const Eigen::MatrixXcd diff = mu - nu;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      s(2 * j, 2 * k) = sum(j, k).real();
      s(2 * j, 2 * k + 1) = -diff(j, k).imag();
      s(2 * j + 1, 2 * k) = sum(j, k).imag();
      s(2 * j + 1, 2 * k + 1) = diff(j, k).real();
    }
  }
  return s;
}

void GaussianState::apply_local(const std::vector<int>& slots, const Eigen::MatrixXd& s) {
  const int n = modes();
  Eigen::MatrixXd full = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (std::size_t a = 0; a < slots.size(); ++a) {
    for (std::size_t b = 0; b < slots.size(); ++b) {
      full.block<2, 2>(2 * slots[a], 2 * slots[b]) = s.block<2, 2>(2 * a, 2 * b);
    }
  }
  for (std::size_t a = 0; a < slots.size(); ++a) {
    for (std::size_t b = a + 1; b < slots.size(); ++b) {
      if (slots[a] == slots[b]) throw DomainError("GaussianState: repeated mode slot");
    }
  }
  apply_symplectic(full);
}

void GaussianState::apply_symplectic(const Eigen::MatrixXd& s) {
  if (s.rows() != mean_.size() || s.cols() != mean_.size()) {
    throw DomainError("GaussianState: symplectic matrix has wrong size");
  }
  mean_ = s * mean_;
  Eigen::MatrixXd c = s * cov_ * s.transpose();
  cov_ = 0.5 * (c + c.transpose());
  check_physical();
}

void GaussianState::apply_bogoliubov(const std::vector<int>& slots, const Eigen::MatrixXcd& mu,
                                     const Eigen::MatrixXcd& nu) {
  for (int m : slots) require_slot(m);
  const auto k = static_cast<Eigen::Index>(slots.size());
  if (mu.rows() != k || mu.cols() != k || nu.rows() != k || nu.cols() != k) {
    throw DomainError("GaussianState: Bogoliubov blocks must match the slot count");
  }
  apply_local(slots, bogoliubov_to_symplectic(mu, nu));
}

void GaussianState::displace(int mode, std::complex<double> alpha) {
  require_slot(mode);
  mean_(2 * mode) += std::sqrt(2.0) * alpha.real();
  mean_(2 * mode + 1) += std::sqrt(2.0) * alpha.imag();
}

void GaussianState::squeeze(int mode, double r, double angle) {
  require_slot(mode);
  Eigen::MatrixXcd mu(1, 1), nu(1, 1);
  mu(0, 0) = std::cosh(r);
  nu(0, 0) = -std::polar(std::sinh(r), angle);
  apply_local({mode}, bogoliubov_to_symplectic(mu, nu));
}

void GaussianState::two_mode_squeeze(int a, int b, double r, double angle) {
  require_slot(a);
  require_slot(b);
  Eigen::MatrixXcd mu = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd nu = Eigen::MatrixXcd::Zero(2, 2);
  mu(0, 0) = mu(1, 1) = std::cosh(r);
  nu(0, 1) = nu(1, 0) = -std::polar(std::sinh(r), angle);
  apply_local({a, b}, bogoliubov_to_symplectic(mu, nu));
}

void GaussianState::beamsplitter(int a, int b, double theta) {
  require_slot(a);
  require_slot(b);
  Eigen::MatrixXcd mu(2, 2);
  mu << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  const Eigen::MatrixXcd nu = Eigen::MatrixXcd::Zero(2, 2);
  apply_local({a, b}, bogoliubov_to_symplectic(mu, nu));
}

void GaussianState::rotate(int mode, double angle) {
  require_slot(mode);
  Eigen::MatrixXcd mu(1, 1);
  mu(0, 0) = std::polar(1.0, -angle);
  const Eigen::MatrixXcd nu = Eigen::MatrixXcd::Zero(1, 1);
  apply_local({mode}, bogoliubov_to_symplectic(mu, nu));
}

std::complex<double> GaussianState::amplitude(int mode) const {
  require_slot(mode);
  return {mean_(2 * mode) / std::sqrt(2.0), mean_(2 * mode + 1) / std::sqrt(2.0)};
}

double GaussianState::phonon_number(int mode) const {
  require_slot(mode);
  const double x = mean_(2 * mode);
  const double p = mean_(2 * mode + 1);
  return 0.5 * (cov_(2 * mode, 2 * mode) + cov_(2 * mode + 1, 2 * mode + 1) + x * x + p * p) - 0.5;
}

double GaussianState::coherent_number(int mode) const {
  require_slot(mode);
  const double x = mean_(2 * mode);
  const double p = mean_(2 * mode + 1);
  return 0.5 * (x * x + p * p);
}

double GaussianState::total_phonon_number() const {
  double n = 0.0;
  for (int m = 0; m < modes(); ++m) n += phonon_number(m);
  return n;
}

double GaussianState::symmetry_defect() const { return (cov_ - cov_.transpose()).cwiseAbs().maxCoeff(); }

double GaussianState::min_symplectic_eigenvalue() const {
  const Eigen::Index dim = cov_.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ev(0.5 * (cov_ + cov_.transpose()));
  const Eigen::VectorXd lam = ev.eigenvalues();
  if (lam.minCoeff() <= 0.0) return lam.minCoeff();
  const Eigen::MatrixXd root = ev.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
                               ev.eigenvectors().transpose();
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim / 2; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  const Eigen::MatrixXd m = root * omega * root;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sq(m.transpose() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, sq.eigenvalues().minCoeff()));
}

void GaussianState::check_physical(double tol) const {
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if (symmetry_defect() > 1e-12 * scale) {
    throw NumericError("GaussianState: covariance lost symmetry");
  }
  const double nu = min_symplectic_eigenvalue();
  if (nu < 0.5 - tol * scale) {
    std::ostringstream msg;
    msg << "GaussianState: minimum symplectic eigenvalue " << nu << " below 1/2";
    throw NumericError(msg.str());
  }
}

void GaussianState::write_csv(std::ostream& os) const {
  char buf[40];
  os << "mode,phonons,coherent,re_b,im_b\n";
  for (int m = 0; m < modes(); ++m) {
    const auto b = amplitude(m);
    os << m;
    for (double v : {phonon_number(m), coherent_number(m), b.real(), b.imag()}) {
      std::snprintf(buf, sizeof buf, "%.12e", v);
      os << ',' << buf;
    }
    os << '\n';
  }
  os << "mean";
  for (Eigen::Index i = 0; i < mean_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12e", mean_(i));
    os << ',' << buf;
  }
  os << '\n';
  for (Eigen::Index r = 0; r < cov_.rows(); ++r) {
    os << "cov" << r;
    for (Eigen::Index c = 0; c < cov_.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.12e", cov_(r, c));
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace becgrav
