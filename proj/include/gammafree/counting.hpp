#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gammafree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// Stirling number of the second kind S(n, m): partitions of an n-set
// into m nonempty blocks.  Values come from a process-wide memoized
// triangle built with S(n,m) = m*S(n-1,m) + S(n-1,m-1); growth of the
// triangle is serialized behind a mutex.
BigInt stirling2(int n, int m);

// Number of n x k Gamma-free 0-1 matrices:
//   sum_{m=0}^{min(n,k)} m! S(n+1, m+1) m! S(k+1, m+1),
// the poly-Bernoulli number B_n^(-k).
BigInt poly_bernoulli(int n, int k);

// Number of n x k Gamma-free matrices without all-zero rows or
// columns: sum_m (m!)^2 S(n, m) S(k, m).
BigInt count_naf(int n, int k);

}  // namespace gammafree
