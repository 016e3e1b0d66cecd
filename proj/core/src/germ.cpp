#include "orbipencil/germ.hpp"

#include <sstream>

#include "orbipencil/errors.hpp"
#include "orbipencil/resolution.hpp"

namespace orbipencil {

GermModel::GermModel(long p_, long q_, long mult) : p(p_), q(q_), multiplicity(mult) {
    if (p > q) std::swap(p, q);
    if (p < 1 || multiplicity < 1) throw std::invalid_argument("invalid germ parameters");
}

bool GermModel::operator<(const GermModel& o) const {
    return std::tie(p, q, multiplicity) < std::tie(o.p, o.q, o.multiplicity);
}

std::string GermModel::str() const {
    std::ostringstream os;
    os << "x^" << p << " + y^" << q;
    if (multiplicity > 1) os << " (multiplicity " << multiplicity << ")";
    return os.str();
}

LaurentPoly local_alexander(long p, long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("torus exponents must be positive");
    if (std::gcd(p, q) != 1)
        throw calc_error(errc::not_coprime,
                         "closed form needs gcd(p, q) = 1; use the resolution graph route");
    if (p == 1 || q == 1) return LaurentPoly(1);
    LaurentPoly numer = LaurentPoly::tn_minus_1(p * q) * LaurentPoly::tn_minus_1(1);
    LaurentPoly denom = LaurentPoly::tn_minus_1(p) * LaurentPoly::tn_minus_1(q);
    return poly_exact_div(numer, denom).unit_normal();
}

long monodromy_order(long p, long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("torus exponents must be positive");
    if (std::gcd(p, q) != 1) throw calc_error(errc::not_coprime, "monodromy order needs coprime exponents");
    if (p == 1 || q == 1) return 1;
    return p * q;
}

LaurentPoly germ_alexander(const GermModel& g) {
    if (g.is_smooth()) return LaurentPoly(1);
    if (g.coprime()) return local_alexander(g.p, g.q);
    ResolutionGraph graph = resolution_graph(g.p, g.q);
    return acampo_charpoly(graph, graph.total_branches());
}

}  // namespace orbipencil
