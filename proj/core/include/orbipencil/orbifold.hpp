#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbipencil/numeric.hpp"
#include "orbipencil/smith.hpp"

namespace orbipencil {

/// Genus-0 orbifold with marked points.  A mark of multiplicity m >= 2 is a
/// cone point with stabilizer Z/m; an unset multiplicity means infinity, i.e.
/// the point has been removed from the underlying P^1.
struct OrbifoldP1 {
    struct Mark {
        std::string label;
        std::optional<long> multiplicity;  // nullopt = infinity

        bool finite() const { return multiplicity.has_value(); }
    };

    std::vector<Mark> marks;

    static OrbifoldP1 from_multiplicities(const std::vector<std::optional<long>>& ms);

    void validate() const;
    bool all_finite() const;
    std::string str() const;
};

/// Orbifold Euler characteristic 2 - sum (1 - 1/m_i), with 1/inf = 0.
Rat orbifold_euler(const OrbifoldP1& orb);

/// Abelianization of pi_1^orb = pi_1(P^1 minus marks) / <gamma_i^{m_i}>:
/// Smith normal form of the relations {m_i e_i : m_i finite} plus the
/// product relation sum e_i (meridians of P^1 multiply to 1, marks removed
/// or not).
AbelianGroupInvariants orbifold_abelianization(const OrbifoldP1& orb);

}  // namespace orbipencil
