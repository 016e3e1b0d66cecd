#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbipencil/numeric.hpp"

namespace orbipencil {

/// Configuration of curves on a smooth projective surface with exact
/// intersection data, Euler characteristic and a Q-canonical divisor
/// supported on the tracked curves.
///
/// Each curve carries its geometric genus and, when known, the total delta
/// invariant of its remaining singular points (0 = smooth).  Blow-ups and
/// blow-downs maintain delta exactly (binom(m, 2) per center / per contracted
/// intersection), so adjunction
///     2 (genus + delta) - 2 = C^2 + K.C
/// is checked after every operation whenever the canonical divisor is
/// completely tracked.
struct SurfaceLedger {
    struct Curve {
        long genus = 0;
        Rat self = 0;
        std::optional<long> delta;  // sum of delta invariants; nullopt = unknown singularities
    };

    std::map<std::string, Curve> curves;
    std::map<std::pair<std::string, std::string>, long> crossings;  // sorted label pairs, nonzero only
    long euler = 0;
    std::map<std::string, Rat> canonical;
    bool canonical_complete = false;
    std::map<std::string, std::map<std::string, Rat>> divisors;  // tracked Q-divisors

    const Curve& curve(const std::string& label) const;
    bool has_curve(const std::string& label) const { return curves.count(label) > 0; }
    long intersection(const std::string& a, const std::string& b) const;  // off-diagonal
    void set_intersection(const std::string& a, const std::string& b, long v);

    Rat canonical_coeff(const std::string& label) const;
    /// K . C from the tracked representation of K
    Rat canonical_dot(const std::string& label) const;
    /// pairing of a tracked Q-divisor with a curve
    Rat divisor_dot(const std::map<std::string, Rat>& div, const std::string& label) const;
    bool canonical_trivial() const;

    std::optional<Rat> adjunction_residual(const std::string& label) const;

    /// symmetry, nonnegativity, label hygiene, adjunction when complete
    void validate() const;
    void define_divisor(const std::string& name, std::map<std::string, Rat> coeffs);
};

struct BlowUpCenter {
    std::string curve;
    long multiplicity = 1;
};

/// Blow up a point lying on the listed curves with the given multiplicities;
/// the new exceptional curve gets genus 0 and self-intersection -1.
SurfaceLedger blow_up(const SurfaceLedger& s, const std::vector<BlowUpCenter>& point,
                      const std::string& new_label);

/// Contract a smooth rational (-1)-curve.
SurfaceLedger blow_down(const SurfaceLedger& s, const std::string& label);

/// Hirzebruch-Jung expansion n/q = b_1 - 1/(b_2 - 1/(...)), all b_i >= 2.
std::vector<long> hirzebruch_jung(long n, long q);

/// How each curve behaves in a cyclic cover: number of conjugate components,
/// geometric ramification index, optional component names, and intersections
/// among conjugates.  Nodes of the branch divisor that acquire a cyclic
/// quotient singularity upstairs carry a Hirzebruch-Jung chain insertion.
struct CoverAnnotation {
    struct CurveData {
        long components = 1;
        long ramification = 1;
        std::vector<std::string> names;  // optional; size = components
        long mutual = 0;                 // total intersections among conjugates
    };
    struct NodeChain {
        std::string first, second;                   // chain runs from first to second
        long n = 1, q = 1;                           // quotient singularity type
        std::vector<std::vector<std::string>> names;  // optional; per node, then per chain curve
    };

    std::map<std::string, CurveData> curves;
    std::vector<NodeChain> chains;

    const CurveData* find(const std::string& label) const;
};

/// Degree-n cyclic cover branched along the reduction of the named tracked
/// divisor, whose coefficients mod n are the rotation residues.  Splitting
/// data comes from the annotation and is validated against the projection
/// formula (pi*C).(pi*D) = n (C.D), Riemann-Hurwitz genus integrality,
/// self-intersection integrality after chain insertion, the Euler
/// characteristic ledger and adjunction.  The result is the smooth surface
/// obtained after resolving all annotated quotient singularities.
SurfaceLedger cyclic_cover(const SurfaceLedger& s, long degree, const std::string& branch,
                           const CoverAnnotation& ann);

struct CanonicalReport {
    struct Row {
        std::string label;
        long genus = 0;
        std::optional<long> delta;
        Rat self = 0;
        Rat canonical_dot = 0;
        std::optional<Rat> adjunction_residual;
    };

    std::vector<Row> rows;
    long euler = 0;
    bool canonical_complete = false;
    bool canonical_trivial = false;
    std::optional<long> first_betti;
    std::optional<std::string> kodaira_hint;
};

CanonicalReport canonical_report(const SurfaceLedger& s, std::optional<long> first_betti = std::nullopt);

}  // namespace orbipencil
