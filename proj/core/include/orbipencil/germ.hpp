#pragma once

#include <string>

#include "orbipencil/laurent.hpp"

namespace orbipencil {

/// Plane curve germ x^p + y^q (p <= q), possibly non-reduced.  torus(1, q) is
/// smooth, torus(2, 2) the node A_1, torus(2, 2g+1) the singularity A_{2g}.
struct GermModel {
    long p = 1;
    long q = 1;
    long multiplicity = 1;

    GermModel() = default;
    GermModel(long p_, long q_, long mult = 1);

    static GermModel a2g(long g) { return GermModel(2, 2 * g + 1); }
    static GermModel node() { return GermModel(2, 2); }

    bool is_smooth() const { return p == 1; }
    bool coprime() const { return std::gcd(p, q) == 1; }
    long milnor_number() const { return (p - 1) * (q - 1); }

    bool operator==(const GermModel&) const = default;
    bool operator<(const GermModel& o) const;
    std::string str() const;
};

/// Characteristic polynomial of the monodromy on H^1 of the Milnor fiber for
/// a coprime torus germ: (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), monic of
/// degree (p-1)(q-1).  Throws not_coprime when gcd(p, q) > 1; multibranch
/// germs go through resolution_graph + acampo_charpoly instead.
LaurentPoly local_alexander(long p, long q);

/// Order of the (semisimple) monodromy: p*q for coprime p, q >= 2, and 1 for
/// a smooth germ.
long monodromy_order(long p, long q);

/// Local Alexander polynomial of any supported germ, dispatching to the
/// closed form or the resolution-graph route.  Convention: the monodromy
/// characteristic polynomial on H^1, so each extra branch contributes its
/// (t - 1) factor; unibranched germs have none.
LaurentPoly germ_alexander(const GermModel& g);

}  // namespace orbipencil
