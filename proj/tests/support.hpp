#pragma once

// Independent oracles and random generators shared by the test binaries.

#include "cfhankel/cfrac.hpp"
#include "cfhankel/eigen_support.hpp"
#include "cfhankel/polynomial.hpp"
#include "cfhankel/scalar.hpp"

#include <random>
#include <vector>

namespace cfh::test {

/// Laplace expansion along the first row; exponential, fine up to ~8x8.
template <typename T>
T cofactor_det(const DenseMatrix<T>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total(0);
  for (Eigen::Index col = 0; col < n; ++col) {
    DenseMatrix<T> minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, jj = 0; j < n; ++j)
        if (j != col) minor(i - 1, jj++) = m(i, j);
    const T term = m(0, col) * cofactor_det<T>(minor);
    total = col % 2 == 0 ? T(total + term) : T(total - term);
  }
  return total;
}

inline const ParamPoly& gamma_poly() {
  static const ParamPoly g(std::vector<Rational>{Rational(0), Rational(1)});
  return g;
}

/// Small rational p/q with |p| <= 5, 1 <= q <= 4.
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

inline ParamPoly random_param_poly(std::mt19937& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(random_rational(rng));
  return ParamPoly(std::move(c));
}

/// C-fraction with a_k in {+-1, +-2, +-3, +-1/2} and q_k in {1, 2, 3}.
inline CFraction<Rational> random_cfraction(std::mt19937& rng, std::size_t max_terms = 6) {
  static const std::vector<Rational> pool{Rational(1), Rational(-1), Rational(2), Rational(-2),
                                          Rational(3), Rational(-3), Rational(1, 2), Rational(-1, 2)};
  std::uniform_int_distribution<std::size_t> len(1, max_terms), pick(0, pool.size() - 1), qd(1, 3);
  CFraction<Rational> cf;
  for (std::size_t k = 0, n = len(rng); k < n; ++k) {
    cf.a.push_back(pool[pick(rng)]);
    cf.q.push_back(qd(rng));
  }
  cf.status = Termination::terminated;
  return cf;
}

/// Random series with unit constant term.
inline Series<Rational> random_unit_series(std::mt19937& rng, std::size_t order) {
  std::vector<Rational> c{Rational(1)};
  for (std::size_t k = 1; k <= order; ++k) c.push_back(random_rational(rng));
  return Series<Rational>(std::move(c));
}

template <typename T>
std::vector<T> as_vector(std::initializer_list<T> v) {
  return std::vector<T>(v);
}

inline std::vector<Rational> rationals(std::initializer_list<long long> v) {
  std::vector<Rational> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace cfh::test
