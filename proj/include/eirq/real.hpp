#ifndef EIRQ_REAL_HPP
#define EIRQ_REAL_HPP

#include <boost/multiprecision/float128.hpp>
#include <quadmath.h>

namespace eirq {

// binary128: homogeneous metrics take i-th roots of layer-i errors, so double
// roundoff (1e-16) already shows up as 1e-8 in a step-2 residual.
using Real = boost::multiprecision::float128;

inline double to_double(const Real& r) { return r.convert_to<double>(); }

inline bool is_finite(const Real& r) { return boost::multiprecision::isfinite(r); }

// The Boost wrappers for these three fail to compile on Boost 1.74.
inline Real asinh(const Real& r) { return Real(asinhq(r.backend().value())); }
inline Real atanh(const Real& r) { return Real(atanhq(r.backend().value())); }
inline Real log1p(const Real& r) { return Real(log1pq(r.backend().value())); }

}  // namespace eirq

#endif
