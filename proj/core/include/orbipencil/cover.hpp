#pragma once

#include <map>
#include <vector>

#include "orbipencil/germ.hpp"
#include "orbipencil/orbifold.hpp"

namespace orbipencil {

/// Degree-N cyclic cover of an orbifold P^1, given by the deck rotation
/// residue at each mark.  Admissibility: N / gcd(a_i, N) = m_i at every mark
/// and sum a_i = 0 in Z/N (the data extends over the sphere).
struct CyclicCoverSpec {
    long degree = 1;
    std::map<std::string, long> rotation;  // mark label -> residue mod degree
};

struct CoverCurve {
    long components = 1;
    long genus_per_component = 0;
    long total_euler = 2;

    bool operator==(const CoverCurve&) const = default;
};

/// Riemann-Hurwitz for a global-quotient cover: chi = N * chi^orb, split over
/// gcd(a_i, N) conjugate components.  Throws stabilizer_mismatch /
/// non_extendable / integrality_violation on inconsistent character data.
CoverCurve cyclic_cover_curve(const OrbifoldP1& orb, const CyclicCoverSpec& spec);

/// One isogeny factor of a local Albanese variety: the Jacobian of a cyclic
/// Belyi cover, recorded by its genus and branching data.
struct AlbaneseSummand {
    long genus = 0;
    long cover_degree = 1;
    std::vector<long> ramification;  // indices over the three branch points
    long count = 1;

    bool operator==(const AlbaneseSummand&) const = default;
};

/// Isogeny decomposition of the local Albanese variety of a coprime torus
/// germ: the single positive-genus exceptional curve of the resolution of
/// z^{pq} = x^p + y^q is the Belyi cover of degree pq ramified (p, q, pq),
/// of genus (p-1)(q-1)/2.  Smooth germs decompose trivially; non-coprime
/// germs are out of scope and throw not_coprime.
std::vector<AlbaneseSummand> local_albanese_decomposition(const GermModel& g);

}  // namespace orbipencil
