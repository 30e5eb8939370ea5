#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixkit {

// Kahan-compensated sum; stationary-density ratios span many orders of
// magnitude on stretched graphs, so plain accumulation loses digits.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

// Probability mass over vertices. A flagged sub-probability variant carries
// the leaked mass of restricted evolutions.
class Distribution {
 public:
  Distribution() = default;

  static Distribution point_mass(Eigen::Index n, Eigen::Index v) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
    m[v] = 1.0;
    return Distribution(std::move(m), false, true);
  }

  static Distribution from_vector(Eigen::VectorXd m, bool sub_probability = false) {
    return Distribution(std::move(m), sub_probability, true);
  }

  // No validation; for internal evolution loops.
  static Distribution unchecked(Eigen::VectorXd m, bool sub_probability = false) {
    return Distribution(std::move(m), sub_probability, false);
  }

  const Eigen::VectorXd& vec() const { return m_; }
  double operator[](Eigen::Index v) const { return m_[v]; }
  Eigen::Index size() const { return m_.size(); }
  bool sub_probability() const { return sub_; }
  double total_mass() const { return m_.sum(); }

 private:
  Distribution(Eigen::VectorXd m, bool sub, bool validate) : m_(std::move(m)), sub_(sub) {
    if (!validate) return;
    if ((m_.array() < -1e-12).any()) throw std::invalid_argument("distribution: negative mass");
    double s = m_.sum();
    if (sub_) {
      if (s > 1.0 + 1e-12) throw std::invalid_argument("distribution: mass exceeds 1");
    } else if (std::abs(s - 1.0) > 1e-12) {
      throw std::invalid_argument("distribution: mass does not sum to 1");
    }
  }

  Eigen::VectorXd m_;
  bool sub_ = false;
};

inline constexpr double kInfinityP = std::numeric_limits<double>::infinity();

// ||mu - nu||_{p,pi} = (sum_x pi(x) |mu(x)-nu(x)|^p / pi(x)^p)^(1/p);
// p = infinity gives max_x |mu(x)-nu(x)|/pi(x). p = 1 is twice the
// total-variation distance.
inline double lp_distance(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu,
                          const Eigen::VectorXd& pi, double p) {
  if (mu.size() != nu.size() || mu.size() != pi.size())
    throw std::invalid_argument("lp_distance: size mismatch");
  if (p < 1.0) throw std::invalid_argument("lp_distance: p must be in [1, inf]");
  const Eigen::Index n = mu.size();
  if (p == kInfinityP) {
    double worst = 0.0;
    for (Eigen::Index x = 0; x < n; ++x) {
      double d = std::abs(mu[x] - nu[x]);
      if (d == 0.0) continue;
      if (pi[x] <= 0.0) throw std::invalid_argument("lp_distance: mass outside support of pi");
      worst = std::max(worst, d / pi[x]);
    }
    return worst;
  }
  KahanSum s;
  for (Eigen::Index x = 0; x < n; ++x) {
    double d = std::abs(mu[x] - nu[x]);
    if (d == 0.0) continue;
    if (pi[x] <= 0.0) throw std::invalid_argument("lp_distance: mass outside support of pi");
    s.add(pi[x] * std::pow(d / pi[x], p));
  }
  if (p == 1.0) return s.value();
  return std::pow(s.value(), 1.0 / p);
}

inline double lp_distance(const Distribution& mu, const Distribution& nu, const Distribution& pi,
                          double p) {
  return lp_distance(mu.vec(), nu.vec(), pi.vec(), p);
}

inline double total_variation(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) {
  return 0.5 * (mu - nu).cwiseAbs().sum();
}

}  // namespace mixkit
