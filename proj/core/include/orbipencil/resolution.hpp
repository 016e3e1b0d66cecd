#pragma once

#include <utility>
#include <vector>

#include "orbipencil/germ.hpp"
#include "orbipencil/laurent.hpp"

namespace orbipencil {

/// Dual graph of an embedded resolution: exceptional curves weighted by
/// self-intersection, genus and the order of vanishing of the pulled-back
/// germ; arrows mark strict-transform branches.
struct ResolutionGraph {
    struct Vertex {
        int id = 0;
        long self_int = -1;
        long genus = 0;
        long multiplicity = 1;  // order of vanishing of f o pi along this divisor
    };
    struct Arrow {
        int vertex = 0;
        long branches = 1;
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<Arrow> arrows;

    long total_branches() const;
    long valence(int id) const;  // incident edges plus arrow branches

    /// connectivity, self-intersections <= -1, and the adjacency relation
    /// m_i * (-E_i^2) = sum of adjacent m_j + branches at i.
    /// Throws malformed_graph when violated.
    void validate() const;
};

/// Embedded resolution of x^p + y^q (p, q >= 2) by the minimal regular
/// subdivision of the positive quadrant fan; multiplicities, genera and
/// self-intersections are all exact.  For coprime (p, q) the graph is a chain
/// with a single rupture vertex of multiplicity p*q carrying the arrow; in
/// general gcd(p, q) branches attach there.
ResolutionGraph resolution_graph(long p, long q);

/// Monodromy characteristic polynomial on H^1 of the Milnor fiber from the
/// zeta function of the graph: zeta(t) = prod (1 - t^{m_i})^{-chi(E_i°)},
/// char poly recovered from (1 - t) * zeta reversed to top degree.
/// `branches` cross-checks the arrow count.
LaurentPoly acampo_charpoly(const ResolutionGraph& g, long branches);

}  // namespace orbipencil
