#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "orbipencil/cyclotomic.hpp"
#include "orbipencil/germ.hpp"
#include "orbipencil/smith.hpp"

namespace orbipencil {

/// Curve families with known exact Alexander polynomials.
struct OkaFamily {
    long g = 1;  // singularities A_{2g}
    long k = 1;  // degree 2k(2g+1)
};
struct FermatTypeFamily {
    long m = 3;  // odd; degree 2m, singularities A_{m-1} at the 3m base points
};
struct QuinticPlusLine {};

using FamilyTag = std::variant<std::monostate, OkaFamily, FermatTypeFamily, QuinticPlusLine>;

/// Plane curve described by its component degrees and singularity inventory.
struct CurveSpec {
    struct Component {
        std::string label;
        long degree = 1;
    };
    struct SingularityClass {
        GermModel germ;
        long count = 1;
    };

    std::vector<Component> components;
    std::vector<SingularityClass> singularities;
    FamilyTag family;

    long total_degree() const;
    void validate() const;

    static CurveSpec oka(long g, long k);
    static CurveSpec fermat_type(long m);
    static CurveSpec quintic_plus_line();
};

/// Finite-order character of the complement's fundamental group, recorded by
/// its value (residue mod N) on the meridian of each component.
struct CharacterSpec {
    long order = 1;
    std::vector<long> values;  // one residue per component, in component order

    void validate(const CurveSpec& c) const;
};

/// H_1 of the complement: Z^{r+1} modulo the single relation (d_0, ..., d_r).
AbelianGroupInvariants complement_h1(const CurveSpec& c);

/// True iff the character is nonzero on every component's meridian.
bool character_is_ramified(const CurveSpec& c, const CharacterSpec& chi);

/// Divisor-lattice upper bound for the Alexander polynomial: the product of
/// local polynomials with every cyclotomic factor Phi_n removed unless
/// n > 1 divides the total degree.
LaurentPoly alexander_sieve(const CurveSpec& c);

/// Exact Alexander polynomial for the tagged families (relative to the
/// family's designated character).  Throws unknown_family when untagged.
LaurentPoly family_alexander(const CurveSpec& c);

/// dim Alb of the associated cover: half the degree of Delta.
long albanese_dimension(const LaurentPoly& delta);

/// Residues k mod N whose root of unity e^{2 pi i k / N} is a zero of Delta,
/// decided exactly through the cyclotomic factorization.
std::set<long> eigenvalue_support(const LaurentPoly& delta, long n);

/// The singularity classes whose local polynomial vanishes at a primitive
/// root of unity of order xi_order: the computable witness set S_chi through
/// which a nontrivial local contribution can occur.
std::vector<CurveSpec::SingularityClass> witness_points(const CurveSpec& c, const CharacterSpec& chi,
                                                        long xi_order);

}  // namespace orbipencil
