#pragma once

#include "cfhankel/polynomial.hpp"
#include "cfhankel/rational.hpp"
#include "cfhankel/scalar.hpp"

#include <Eigen/Core>

namespace cfh::detail {

template <typename T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32,
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};

}  // namespace cfh::detail

namespace Eigen {

template <>
struct NumTraits<cfh::Rational> : cfh::detail::ExactNumTraits<cfh::Rational> {};
template <>
struct NumTraits<cfh::ParamPoly> : cfh::detail::ExactNumTraits<cfh::ParamPoly> {};
template <>
struct NumTraits<cfh::Scalar> : cfh::detail::ExactNumTraits<cfh::Scalar> {};

}  // namespace Eigen

namespace cfh {

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace cfh
