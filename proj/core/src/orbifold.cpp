#include "orbipencil/orbifold.hpp"

#include <set>
#include <sstream>

#include "orbipencil/errors.hpp"

namespace orbipencil {

OrbifoldP1 OrbifoldP1::from_multiplicities(const std::vector<std::optional<long>>& ms) {
    OrbifoldP1 orb;
    for (std::size_t i = 0; i < ms.size(); ++i)
        orb.marks.push_back({"P" + std::to_string(i + 1), ms[i]});
    orb.validate();
    return orb;
}

void OrbifoldP1::validate() const {
    std::set<std::string> labels;
    for (const auto& m : marks) {
        if (!labels.insert(m.label).second)
            throw std::invalid_argument("duplicate mark label '" + m.label + "'");
        if (m.finite() && *m.multiplicity < 2)
            throw std::invalid_argument("mark multiplicity must be >= 2 or infinity");
    }
}

bool OrbifoldP1::all_finite() const {
    for (const auto& m : marks)
        if (!m.finite()) return false;
    return true;
}

std::string OrbifoldP1::str() const {
    std::ostringstream os;
    os << "P1_(";
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (i) os << ",";
        if (marks[i].finite())
            os << *marks[i].multiplicity;
        else
            os << "inf";
    }
    os << ")";
    return os.str();
}

Rat orbifold_euler(const OrbifoldP1& orb) {
    orb.validate();
    Rat chi = 2;
    for (const auto& m : orb.marks) {
        if (m.finite())
            chi -= Rat(*m.multiplicity - 1, *m.multiplicity);
        else
            chi -= 1;
    }
    return chi;
}

AbelianGroupInvariants orbifold_abelianization(const OrbifoldP1& orb) {
    orb.validate();
    const std::size_t s = orb.marks.size();
    IntMatrix relations;
    for (std::size_t i = 0; i < s; ++i) {
        if (!orb.marks[i].finite()) continue;
        std::vector<Int> row(s, 0);
        row[i] = *orb.marks[i].multiplicity;
        relations.push_back(std::move(row));
    }
    relations.push_back(std::vector<Int>(s, 1));  // meridians multiply to 1 on P^1
    return smith_normal_form(relations, s);
}

}  // namespace orbipencil
