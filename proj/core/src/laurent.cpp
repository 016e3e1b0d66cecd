#include "orbipencil/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "orbipencil/errors.hpp"

namespace orbipencil {

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw schema_error("not an exact number: '" + s + "'");
    }
}

std::string rational_string(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

LaurentPoly::LaurentPoly(const Int& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(std::vector<Int> coeffs, long low) : coeffs_(std::move(coeffs)), low_(low) {
    trim();
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size())
        coeffs_ = std::vector<Int>(coeffs_.begin() + lead, coeffs_.begin() + tail);
    low_ += static_cast<long>(lead);
}

LaurentPoly LaurentPoly::monomial(const Int& c, long exp) {
    LaurentPoly p;
    if (c != 0) {
        p.coeffs_.push_back(c);
        p.low_ = exp;
    }
    return p;
}

LaurentPoly LaurentPoly::tn_minus_1(long n) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
    c.front() = -1;
    c.back() = 1;
    return LaurentPoly(std::move(c));
}

Int LaurentPoly::coeff(long exp) const {
    if (is_zero() || exp < low_ || exp > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exp - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long lo = std::min(low_, o.low_);
    long hi = std::max(high(), o.high());
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (long e = low_; e <= high(); ++e) c[e - lo] += coeff(e);
    for (long e = o.low_; e <= o.high(); ++e) c[e - lo] += o.coeff(e);
    return LaurentPoly(std::move(c), lo);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return LaurentPoly(std::move(c), low_ + o.low_);
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r(1);
    LaurentPoly base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Int LaurentPoly::eval(const Int& x) const {
    if (is_zero()) return 0;
    if (low_ < 0) {
        if (x == 1) {
            Int s = 0;
            for (const auto& c : coeffs_) s += c;
            return s;
        }
        if (x == -1) {
            Int s = 0;
            long e = low_;
            for (const auto& c : coeffs_) s += (e++ % 2 == 0) ? c : -c;
            return s;
        }
        throw std::invalid_argument("cannot evaluate Laurent polynomial with negative exponents at non-unit");
    }
    Int r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    for (long i = 0; i < low_; ++i) r *= x;
    return r;
}

LaurentPoly LaurentPoly::unit_normal() const {
    if (is_zero()) return {};
    LaurentPoly r(*this);
    r.low_ = 0;
    if (r.coeffs_.back() < 0)
        for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool LaurentPoly::is_unit_normal() const {
    return is_zero() || (low_ == 0 && coeffs_.back() > 0);
}

bool LaurentPoly::equal_up_to_unit(const LaurentPoly& o) const {
    return unit_normal() == o.unit_normal();
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r(*this);
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    r.low_ = -high();
    r.trim();
    return r;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = high(); e >= low_; --e) {
        Int c = coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::optional<LaurentPoly> poly_try_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly{};
    // long division from the top; coefficients must stay integral
    std::vector<Int> rem(a.coeffs());
    const std::vector<Int>& d = b.coeffs();
    long qlen = static_cast<long>(rem.size()) - static_cast<long>(d.size()) + 1;
    if (qlen < 1) return std::nullopt;
    std::vector<Int> q(static_cast<std::size_t>(qlen), 0);
    for (long i = qlen - 1; i >= 0; --i) {
        Int top = rem[i + d.size() - 1];
        if (top == 0) continue;
        if (top % d.back() != 0) return std::nullopt;
        Int f = top / d.back();
        q[static_cast<std::size_t>(i)] = f;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return LaurentPoly(std::move(q), a.low() - b.low());
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = poly_try_div(a, b);
    if (!q) throw calc_error(errc::non_divisible, b.str() + " does not divide " + a.str());
    return *q;
}

Int poly_content(const LaurentPoly& a) {
    Int g = 0;
    for (const auto& c : a.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g;
}

namespace {

// one pseudo-division step on primitive parts; inputs non-zero, deg a >= deg b
LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a.unit_normal();
    LaurentPoly d = b.unit_normal();
    while (!r.is_zero() && r.span_degree() >= d.span_degree()) {
        long shift = r.span_degree() - d.span_degree();
        LaurentPoly lead_r = LaurentPoly::monomial(r.leading(), shift);
        r = LaurentPoly(d.leading()) * r - lead_r * d;
        r = r.unit_normal();
    }
    return r;
}

LaurentPoly primitive_part(const LaurentPoly& a) {
    if (a.is_zero()) return a;
    Int c = poly_content(a);
    std::vector<Int> v(a.coeffs());
    for (auto& x : v) x /= c;
    return LaurentPoly(std::move(v));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();
    Int cont = boost::multiprecision::gcd(poly_content(a), poly_content(b));
    LaurentPoly x = primitive_part(a.unit_normal());
    LaurentPoly y = primitive_part(b.unit_normal());
    if (x.span_degree() < y.span_degree()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(x, y));
        x = y;
        y = r;
    }
    return (LaurentPoly(cont) * x).unit_normal();
}

}  // namespace orbipencil
