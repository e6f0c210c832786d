#include "hankel/objective.hpp"

#include "hankel/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hankel {

namespace {

double int_power(double base, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= base;
  return r;
}

}  // namespace

double b_xm(BTensorKind kind, int m, const Eigen::VectorXd& x) {
  switch (kind) {
    case BTensorKind::ZIdentity:
      return int_power(x.norm(), m);
    case BTensorKind::HIdentity: {
      double s = 0.0;
      for (Index i = 0; i < x.size(); ++i) s += int_power(x[i], m);
      return s;
    }
  }
  throw std::logic_error("unknown reference tensor kind");
}

Eigen::VectorXd b_xm1(BTensorKind kind, int m, const Eigen::VectorXd& x) {
  switch (kind) {
    case BTensorKind::ZIdentity:
      // ||x||^0 == 1 covers m == 2, including x == 0.
      return int_power(x.norm(), m - 2) * x;
    case BTensorKind::HIdentity: {
      Eigen::VectorXd out(x.size());
      for (Index i = 0; i < x.size(); ++i) out[i] = int_power(x[i], m - 1);
      return out;
    }
  }
  throw std::logic_error("unknown reference tensor kind");
}

Eigen::MatrixXd b_xm2(BTensorKind kind, int m, const Eigen::VectorXd& x) {
  const Index n = x.size();
  switch (kind) {
    case BTensorKind::ZIdentity: {
      // (m-1) E x^{m-2} is the Hessian of ||x||^m / m.
      const double r = x.norm();
      Eigen::MatrixXd out =
          int_power(r, m - 2) * Eigen::MatrixXd::Identity(n, n);
      if (m > 2) out += (m - 2) * int_power(r, m - 4) * (x * x.transpose());
      return out / static_cast<double>(m - 1);
    }
    case BTensorKind::HIdentity: {
      Eigen::VectorXd diag(n);
      for (Index i = 0; i < n; ++i) diag[i] = int_power(x[i], m - 2);
      return diag.asDiagonal();
    }
  }
  throw std::logic_error("unknown reference tensor kind");
}

ReferenceTensor::ReferenceTensor(BTensorKind kind)
    : kind_(kind),
      name_(kind == BTensorKind::ZIdentity ? "z" : "h"),
      xm_([kind](int m, const Eigen::VectorXd& x) { return b_xm(kind, m, x); }),
      xm1_([kind](int m, const Eigen::VectorXd& x) {
        return b_xm1(kind, m, x);
      }) {}

ReferenceTensor::ReferenceTensor(std::string name, XmFn xm, Xm1Fn xm1)
    : name_(std::move(name)), xm_(std::move(xm)), xm1_(std::move(xm1)) {
  if (!xm_ || !xm1_) {
    throw std::invalid_argument("custom reference tensor needs both products");
  }
}

double ReferenceTensor::xm(int m, const Eigen::VectorXd& x) const {
  return xm_(m, x);
}

Eigen::VectorXd ReferenceTensor::xm1(int m, const Eigen::VectorXd& x) const {
  return xm1_(m, x);
}

ObjectiveEval evaluate(const HankelSpec& spec, const SpectralCache& cache,
                       const ReferenceTensor& b, const Eigen::VectorXd& x) {
  const double norm = x.norm();
  if (!(std::abs(norm - 1.0) <= 1e-8)) {
    std::ostringstream os;
    os.precision(17);
    os << "objective needs a unit vector, got norm " << norm;
    throw std::invalid_argument(os.str());
  }
  const int m = spec.order();
  ObjectiveEval e;
  HankelProducts h = hankel_products(cache, spec, x);
  e.hxm = h.xm;
  e.hxm1 = std::move(h.xm1);
  e.bxm = b.xm(m, x);
  if (!(e.bxm > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "reference tensor " << b.name() << " gives B x^m = " << e.bxm
       << " <= 0 at order " << m << "; it must be positive definite";
    throw InvalidReferenceTensorError(os.str());
  }
  e.bxm1 = b.xm1(m, x);
  e.f = e.hxm / e.bxm;
  e.g = (static_cast<double>(m) / e.bxm) * (e.hxm1 - e.f * e.bxm1);
  // x'g vanishes identically; drop the radial rounding left by the
  // cancellation above.
  e.g -= (x.dot(e.g) / x.squaredNorm()) * x;
  return e;
}

Eigen::MatrixXd quotient_hessian(int m, double hxm, const Eigen::VectorXd& hxm1,
                                 const Eigen::MatrixXd& hxm2, double bxm,
                                 const Eigen::VectorXd& bxm1,
                                 const Eigen::MatrixXd& bxm2) {
  const double md = m;
  auto sym_outer = [](const Eigen::VectorXd& u, const Eigen::VectorXd& w) {
    return Eigen::MatrixXd(u * w.transpose() + w * u.transpose());
  };
  Eigen::MatrixXd h = md * (md - 1) * hxm2 / bxm;
  h -= (md * (md - 1) * hxm * bxm2 + md * md * sym_outer(hxm1, bxm1)) /
       (bxm * bxm);
  h += md * md * hxm * sym_outer(bxm1, bxm1) / (bxm * bxm * bxm);
  return h;
}

double residual(const HankelSpec& spec, const SpectralCache& cache,
                const ReferenceTensor& b, const Eigen::VectorXd& x,
                double lambda) {
  const int m = spec.order();
  return (hankel_xm1(cache, spec, x) - lambda * b.xm1(m, x)).norm();
}

}  // namespace hankel
