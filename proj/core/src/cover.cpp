#include "orbipencil/cover.hpp"

#include "orbipencil/errors.hpp"

namespace orbipencil {

CoverCurve cyclic_cover_curve(const OrbifoldP1& orb, const CyclicCoverSpec& spec) {
    orb.validate();
    const long n = spec.degree;
    if (n < 1) throw std::invalid_argument("cover degree must be positive");
    if (!orb.all_finite())
        throw calc_error(errc::infinite_mark, "cyclic cover needs a compact orbifold (finite marks only)");

    long sum = 0;
    long comp_gcd = n;
    for (const auto& m : orb.marks) {
        auto it = spec.rotation.find(m.label);
        if (it == spec.rotation.end())
            throw calc_error(errc::stabilizer_mismatch, "no rotation residue for mark '" + m.label + "'");
        long a = ((it->second % n) + n) % n;
        if (n / std::gcd(a, n) != *m.multiplicity)
            throw calc_error(errc::stabilizer_mismatch,
                             "mark '" + m.label + "': N/gcd(a, N) = " + std::to_string(n / std::gcd(a, n)) +
                                 " but multiplicity is " + std::to_string(*m.multiplicity));
        sum = (sum + a) % n;
        comp_gcd = std::gcd(comp_gcd, a);
    }
    if (sum % n != 0)
        throw calc_error(errc::non_extendable, "rotation residues do not sum to 0 mod N");

    CoverCurve out;
    out.components = comp_gcd;  // index of the subgroup the residues generate
    Rat chi = Rat(n) * orbifold_euler(orb);
    if (!is_integer(chi))
        throw calc_error(errc::integrality_violation, "N * chi^orb is not an integer");
    out.total_euler = static_cast<long>(to_i64(to_int(chi)));
    long per = out.total_euler;
    if (per % (2 * out.components) != 0)
        throw calc_error(errc::integrality_violation, "cover Euler characteristic does not split into components");
    long genus2 = 2 - per / out.components;  // 2g from chi = k(2 - 2g)
    if (genus2 < 0 || genus2 % 2 != 0)
        throw calc_error(errc::integrality_violation, "component genus is not a nonnegative integer");
    out.genus_per_component = genus2 / 2;
    return out;
}

std::vector<AlbaneseSummand> local_albanese_decomposition(const GermModel& g) {
    if (g.is_smooth()) return {};
    if (!g.coprime())
        throw calc_error(errc::not_coprime,
                         "local Albanese decomposition is only available for coprime torus germs");
    AlbaneseSummand s;
    s.genus = g.milnor_number() / 2;
    s.cover_degree = g.p * g.q;
    s.ramification = {g.p, g.q, g.p * g.q};
    s.count = 1;
    return {s};
}

}  // namespace orbipencil
