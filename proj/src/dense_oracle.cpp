#include "hankel/dense_oracle.hpp"

#include "hankel/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace hankel::oracle {

namespace {

void check_vector(const DenseSymmetricTensor& t, const Eigen::VectorXd& x) {
  if (x.size() != t.dim) {
    throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                " does not match tensor dimension " +
                                std::to_string(t.dim));
  }
}

// Advances a base-n odometer; returns false after the last tuple.
bool next_index(std::vector<Index>& idx, Index n) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < n) return true;
    idx[k] = 0;
  }
  return false;
}

// Visits every (multi-index, entry) pair in storage order.
template <typename Visitor>
void for_each_entry(const DenseSymmetricTensor& t, Visitor&& visit) {
  std::vector<Index> idx(static_cast<std::size_t>(t.order), 0);
  std::size_t flat = 0;
  do {
    visit(idx, t.entries[flat++]);
  } while (next_index(idx, t.dim));
}

double checked_bxm(BTensorKind b, int m, const Eigen::VectorXd& x) {
  const double bxm = b_xm(b, m, x);
  if (!(bxm > 0.0)) {
    std::ostringstream os;
    os << "B x^m = " << bxm << " <= 0; reference tensor is not positive "
       << "definite at this point";
    throw InvalidReferenceTensorError(os.str());
  }
  return bxm;
}

}  // namespace

double DenseSymmetricTensor::at(const std::vector<Index>& index) const {
  std::size_t flat = 0;
  for (Index i : index) flat = flat * static_cast<std::size_t>(dim) +
                               static_cast<std::size_t>(i);
  return entries.at(flat);
}

std::size_t entry_count(int order, Index dim, std::size_t cap) {
  std::size_t count = 1;
  for (int k = 0; k < order; ++k) {
    if (count > cap / static_cast<std::size_t>(dim)) return cap + 1;
    count *= static_cast<std::size_t>(dim);
  }
  return count;
}

DenseSymmetricTensor materialize(const HankelSpec& spec, std::size_t cap) {
  const std::size_t count = entry_count(spec.order(), spec.dim(), cap);
  if (count > cap) {
    throw CapExceededError(
        "dense oracle cap of " + std::to_string(cap) + " entries exceeded by " +
        std::to_string(spec.dim()) + "^" + std::to_string(spec.order()));
  }
  DenseSymmetricTensor t;
  t.order = spec.order();
  t.dim = spec.dim();
  t.entries.resize(count);
  std::vector<Index> idx(static_cast<std::size_t>(t.order), 0);
  std::size_t flat = 0;
  do {
    Index sum = 0;
    for (Index i : idx) sum += i;
    t.entries[flat++] = spec.generator()[sum];
  } while (next_index(idx, t.dim));
  return t;
}

double dense_xm(const DenseSymmetricTensor& t, const Eigen::VectorXd& x) {
  check_vector(t, x);
  double total = 0.0;
  for_each_entry(t, [&](const std::vector<Index>& idx, double a) {
    double term = a;
    for (Index i : idx) term *= x[i];
    total += term;
  });
  return total;
}

Eigen::VectorXd dense_xm1(const DenseSymmetricTensor& t,
                          const Eigen::VectorXd& x) {
  check_vector(t, x);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(t.dim);
  for_each_entry(t, [&](const std::vector<Index>& idx, double a) {
    double term = a;
    for (std::size_t k = 1; k < idx.size(); ++k) term *= x[idx[k]];
    out[idx[0]] += term;
  });
  return out;
}

Eigen::MatrixXd dense_xm2(const DenseSymmetricTensor& t,
                          const Eigen::VectorXd& x) {
  check_vector(t, x);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(t.dim, t.dim);
  for_each_entry(t, [&](const std::vector<Index>& idx, double a) {
    double term = a;
    for (std::size_t k = 2; k < idx.size(); ++k) term *= x[idx[k]];
    out(idx[0], idx[1]) += term;
  });
  return out;
}

Eigen::VectorXd dense_gradient(const DenseSymmetricTensor& t, BTensorKind b,
                               const Eigen::VectorXd& x) {
  const int m = t.order;
  const double bxm = checked_bxm(b, m, x);
  const double txm = dense_xm(t, x);
  return (m / bxm) * (dense_xm1(t, x) - (txm / bxm) * b_xm1(b, m, x));
}

Eigen::MatrixXd dense_hessian(const DenseSymmetricTensor& t, BTensorKind b,
                              const Eigen::VectorXd& x) {
  const int m = t.order;
  const double bxm = checked_bxm(b, m, x);
  return quotient_hessian(m, dense_xm(t, x), dense_xm1(t, x), dense_xm2(t, x),
                          bxm, b_xm1(b, m, x), b_xm2(b, m, x));
}

}  // namespace hankel::oracle
