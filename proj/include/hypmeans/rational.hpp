#pragma once

#include <gmpxx.h>

#include <string>

namespace hypmeans {

/// Exact rational numbers backed by GMP.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Binomial coefficient C(n, k) as an exact rational; zero when k < 0 or k > n.
Rational binomial(long n, long k);

}  // namespace hypmeans
