#pragma once

#include <vector>

#include "orbipencil/numeric.hpp"

namespace orbipencil {

/// Invariant factors of a finitely generated abelian group Z^r + sum Z/d_i,
/// torsion in a divisibility chain d_1 | d_2 | ... with every d_i > 1.
struct AbelianGroupInvariants {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroupInvariants&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // throws if infinite
    std::string str() const;
};

using IntMatrix = std::vector<std::vector<Int>>;

/// Invariants of Z^cols modulo the row span of `relations`.  `cols` may
/// exceed the row width; missing entries are zero.
AbelianGroupInvariants smith_normal_form(const IntMatrix& relations, std::size_t cols);
AbelianGroupInvariants smith_normal_form(const IntMatrix& relations);

}  // namespace orbipencil
