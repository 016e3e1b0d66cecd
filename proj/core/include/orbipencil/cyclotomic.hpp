#pragma once

#include <map>

#include "orbipencil/laurent.hpp"

namespace orbipencil {

long euler_phi(long n);
int moebius(long n);

/// n-th cyclotomic polynomial, monic of degree phi(n).
LaurentPoly cyclotomic(long n);

/// Exact splitting p = prod Phi_n^mult * remainder with cyclotomic-free
/// remainder (unit-normal).  The trivial factor Phi_1 = t - 1 is kept;
/// callers decide whether to strip it.
struct CyclotomicFactorization {
    std::map<long, long> factors;  // order -> multiplicity
    LaurentPoly remainder;

    LaurentPoly product() const;
    bool divides(long n) const { return factors.count(n) > 0; }
};

CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p);

}  // namespace orbipencil
