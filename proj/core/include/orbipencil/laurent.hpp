#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbipencil/numeric.hpp"

namespace orbipencil {

/// Integer Laurent polynomial, dense over [low, low + coeffs.size()).
///
/// The zero polynomial is stored with an empty coefficient vector and low 0;
/// otherwise the first and last stored coefficients are nonzero.  Arithmetic
/// is honest ring arithmetic; `unit_normal()` picks the canonical
/// representative modulo units ±t^k (lowest exponent 0, leading coefficient
/// positive), which is how "defined modulo units" becomes testable equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Int& constant);
    LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}
    LaurentPoly(std::vector<Int> coeffs, long low = 0);

    static LaurentPoly monomial(const Int& c, long exp);
    static LaurentPoly t(long exp = 1) { return monomial(1, exp); }
    /// t^n - 1
    static LaurentPoly tn_minus_1(long n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
    /// degree of the unit-normal representative (= high - low); -1 for zero
    long span_degree() const { return is_zero() ? -1 : high() - low(); }

    Int coeff(long exp) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const { return coeffs_.back(); }
    const Int& trailing() const { return coeffs_.front(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly pow(unsigned long e) const;
    Int eval(const Int& x) const;  // requires low >= 0 unless x is a unit

    LaurentPoly unit_normal() const;
    bool is_unit_normal() const;
    bool equal_up_to_unit(const LaurentPoly& o) const;

    /// mirror image t -> 1/t, renormalized to a Laurent polynomial
    LaurentPoly reversed() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Int> coeffs_;
    long low_ = 0;
};

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division; throws calc_error(non_divisible) if b does not divide a.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> poly_try_div(const LaurentPoly& a, const LaurentPoly& b);

/// gcd over Z[t, 1/t], returned unit-normal with positive content gcd.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

Int poly_content(const LaurentPoly& a);

}  // namespace orbipencil
