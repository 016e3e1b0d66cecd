#include "orbipencil/curve.hpp"

#include <algorithm>

#include "orbipencil/errors.hpp"

namespace orbipencil {

long CurveSpec::total_degree() const {
    long d = 0;
    for (const auto& c : components) d += c.degree;
    return d;
}

void CurveSpec::validate() const {
    if (components.empty()) throw std::invalid_argument("curve needs at least one component");
    for (const auto& c : components)
        if (c.degree < 1) throw std::invalid_argument("component degree must be positive");
    for (const auto& s : singularities)
        if (s.count < 1) throw std::invalid_argument("singularity count must be positive");
    if (const auto* oka = std::get_if<OkaFamily>(&family)) {
        if (oka->g < 1 || oka->k < 1) throw std::invalid_argument("Oka family needs g, k >= 1");
    } else if (const auto* fm = std::get_if<FermatTypeFamily>(&family)) {
        if (fm->m < 3 || fm->m % 2 == 0) throw std::invalid_argument("Fermat-type family needs odd m >= 3");
    }
}

CurveSpec CurveSpec::oka(long g, long k) {
    // f_{2k}^{2g+1} + f_{(2g+1)k}^2 = 0: irreducible of degree 2k(2g+1) with
    // 2k^2(2g+1) singularities A_{2g} at the base points f_{2k} = f_{(2g+1)k} = 0
    CurveSpec c;
    c.components = {{"C1", 2 * k * (2 * g + 1)}};
    c.singularities = {{GermModel(2, 2 * g + 1), 2 * k * k * (2 * g + 1)}};
    c.family = OkaFamily{g, k};
    c.validate();
    return c;
}

CurveSpec CurveSpec::fermat_type(long m) {
    // sum x_i^{2m} - 2 sum (x_i x_j)^m = 0: irreducible of degree 2m with an
    // A_{m-1} point at each of the 3m pencil base points on the axes
    CurveSpec c;
    c.components = {{"C3", 2 * m}};
    c.singularities = {{GermModel(2, m), 3 * m}};
    c.family = FermatTypeFamily{m};
    c.validate();
    return c;
}

CurveSpec CurveSpec::quintic_plus_line() {
    // self-dual quintic with three A_4 points plus a line tangent at one of
    // them; the inventory lists the cusps and the residual transversal node.
    // The tangency point itself is only modelled by the surface replay.
    CurveSpec c;
    c.components = {{"C0", 5}, {"L", 1}};
    c.singularities = {{GermModel(2, 5), 3}, {GermModel(2, 2), 1}};
    c.family = QuinticPlusLine{};
    c.validate();
    return c;
}

void CharacterSpec::validate(const CurveSpec& c) const {
    if (order < 1) throw std::invalid_argument("character order must be positive");
    if (values.size() != c.components.size())
        throw std::invalid_argument("character needs one value per component");
    long g = order;
    for (long v : values) g = std::gcd(g, ((v % order) + order) % order);
    if (g != 1)
        throw std::invalid_argument("character values must generate Z/N (surjective onto N-th roots)");
}

AbelianGroupInvariants complement_h1(const CurveSpec& c) {
    c.validate();
    std::vector<Int> row;
    for (const auto& comp : c.components) row.emplace_back(comp.degree);
    return smith_normal_form({row}, row.size());
}

bool character_is_ramified(const CurveSpec& c, const CharacterSpec& chi) {
    c.validate();
    chi.validate(c);
    for (long v : chi.values)
        if (v % chi.order == 0) return false;
    return true;
}

LaurentPoly alexander_sieve(const CurveSpec& c) {
    c.validate();
    const long d = c.total_degree();
    LaurentPoly product(1);
    for (const auto& s : c.singularities)
        product = product * germ_alexander(s.germ).pow(static_cast<unsigned long>(s.count));
    CyclotomicFactorization f = factor_cyclotomic(product);
    LaurentPoly sieved(1);
    for (const auto& [n, mult] : f.factors) {
        if (n == 1) continue;  // Delta(1) != 0 for irreducible curves
        if (d % n != 0) continue;
        sieved = sieved * cyclotomic(n).pow(static_cast<unsigned long>(mult));
    }
    return sieved.unit_normal();
}

LaurentPoly family_alexander(const CurveSpec& c) {
    c.validate();
    if (std::holds_alternative<std::monostate>(c.family))
        throw calc_error(errc::unknown_family, "curve carries no family tag");
    if (const auto* oka = std::get_if<OkaFamily>(&c.family)) {
        long m = 2 * oka->g + 1;
        return poly_exact_div(LaurentPoly::t(m) + LaurentPoly(1), LaurentPoly::t() + LaurentPoly(1))
            .unit_normal();
    }
    if (const auto* fm = std::get_if<FermatTypeFamily>(&c.family)) {
        LaurentPoly base =
            poly_exact_div(LaurentPoly::t(fm->m) + LaurentPoly(1), LaurentPoly::t() + LaurentPoly(1));
        return base.pow(3).unit_normal();
    }
    // quintic plus line, character of order 10 ramified along C0 + 5L
    return cyclotomic(10);
}

long albanese_dimension(const LaurentPoly& delta) {
    if (delta.is_zero()) throw std::invalid_argument("zero polynomial has no Albanese dimension");
    long deg = delta.span_degree();
    if (deg % 2 != 0) throw calc_error(errc::odd_degree, "polynomial degree is odd");
    return deg / 2;
}

std::set<long> eigenvalue_support(const LaurentPoly& delta, long n) {
    if (n < 1) throw std::invalid_argument("support modulus must be positive");
    std::set<long> out;
    if (delta.is_zero()) return out;
    CyclotomicFactorization f = factor_cyclotomic(delta);
    for (long k = 0; k < n; ++k) {
        long order = n / std::gcd(k, n);
        if (f.divides(order)) out.insert(k);
    }
    return out;
}

std::vector<CurveSpec::SingularityClass> witness_points(const CurveSpec& c, const CharacterSpec& chi,
                                                        long xi_order) {
    if (!character_is_ramified(c, chi))
        throw calc_error(errc::unramified_character, "witness set needs a character ramified along every component");
    if (xi_order < 1 || chi.order % xi_order != 0)
        throw std::invalid_argument("xi order must divide the character order");
    std::vector<CurveSpec::SingularityClass> out;
    for (const auto& s : c.singularities) {
        CyclotomicFactorization f = factor_cyclotomic(germ_alexander(s.germ));
        if (f.divides(xi_order)) out.push_back(s);
    }
    return out;
}

}  // namespace orbipencil
