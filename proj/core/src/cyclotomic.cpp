#include "orbipencil/cyclotomic.hpp"

#include <mutex>
#include <vector>

#include "orbipencil/errors.hpp"

namespace orbipencil {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

LaurentPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // Phi_n(t) = prod_{d | n} (t^{n/d} - 1)^{mu(d)}
    LaurentPoly numer(1), denom(1);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(d);
        if (mu == 1)
            numer = numer * LaurentPoly::tn_minus_1(n / d);
        else if (mu == -1)
            denom = denom * LaurentPoly::tn_minus_1(n / d);
    }
    return poly_exact_div(numer, denom).unit_normal();
}

LaurentPoly CyclotomicFactorization::product() const {
    LaurentPoly p = remainder;
    for (const auto& [n, mult] : factors) p = p * cyclotomic(n).pow(static_cast<unsigned long>(mult));
    return p.unit_normal();
}

CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    CyclotomicFactorization out;
    LaurentPoly rem = p.unit_normal();
    // Phi_n can divide only if phi(n) <= deg rem; phi(n) >= sqrt(n) for n > 6
    // bounds the search to n <= max(6, deg^2).
    for (long n = 1; !rem.is_one(); ++n) {
        long deg = rem.span_degree();
        if (n > std::max<long>(6, deg * deg)) break;
        if (euler_phi(n) > deg) continue;
        LaurentPoly phi = cyclotomic(n);
        while (true) {
            auto q = poly_try_div(rem, phi);
            if (!q) break;
            ++out.factors[n];
            rem = q->unit_normal();
        }
    }
    out.remainder = rem;
    return out;
}

}  // namespace orbipencil
