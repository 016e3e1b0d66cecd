#include "orbipencil/ledger.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "orbipencil/errors.hpp"

namespace orbipencil {

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

long binom2(long k) { return k * (k - 1) / 2; }

}  // namespace

const SurfaceLedger::Curve& SurfaceLedger::curve(const std::string& label) const {
    auto it = curves.find(label);
    if (it == curves.end()) throw calc_error(errc::unknown_reference, "no curve '" + label + "'");
    return it->second;
}

long SurfaceLedger::intersection(const std::string& a, const std::string& b) const {
    if (a == b) throw std::invalid_argument("use self-intersection for the diagonal");
    auto it = crossings.find(key(a, b));
    return it == crossings.end() ? 0 : it->second;
}

void SurfaceLedger::set_intersection(const std::string& a, const std::string& b, long v) {
    if (v < 0) throw calc_error(errc::negative_intersection, a + "." + b + " would become negative");
    if (v == 0)
        crossings.erase(key(a, b));
    else
        crossings[key(a, b)] = v;
}

Rat SurfaceLedger::canonical_coeff(const std::string& label) const {
    auto it = canonical.find(label);
    return it == canonical.end() ? Rat(0) : it->second;
}

Rat SurfaceLedger::divisor_dot(const std::map<std::string, Rat>& div, const std::string& label) const {
    Rat dot = 0;
    for (const auto& [other, coeff] : div) {
        if (coeff == 0) continue;
        dot += coeff * (other == label ? curve(label).self : Rat(intersection(other, label)));
    }
    return dot;
}

Rat SurfaceLedger::canonical_dot(const std::string& label) const { return divisor_dot(canonical, label); }

bool SurfaceLedger::canonical_trivial() const {
    if (!canonical_complete) return false;
    for (const auto& [label, coeff] : canonical)
        if (coeff != 0) return false;
    return true;
}

std::optional<Rat> SurfaceLedger::adjunction_residual(const std::string& label) const {
    const Curve& c = curve(label);
    if (!canonical_complete || !c.delta) return std::nullopt;
    return c.self + canonical_dot(label) - Rat(2 * (c.genus + *c.delta) - 2);
}

void SurfaceLedger::validate() const {
    for (const auto& [labels, v] : crossings) {
        if (!has_curve(labels.first) || !has_curve(labels.second) || labels.first >= labels.second)
            throw std::invalid_argument("malformed intersection table");
        if (v < 0) throw calc_error(errc::negative_intersection, "negative intersection entry");
    }
    for (const auto& [label, coeff] : canonical)
        if (!has_curve(label)) throw std::invalid_argument("canonical coefficient for unknown curve");
    for (const auto& [name, div] : divisors)
        for (const auto& [label, coeff] : div)
            if (!has_curve(label)) throw std::invalid_argument("divisor '" + name + "' names unknown curve");
    for (const auto& [label, c] : curves) {
        if (c.genus < 0 || (c.delta && *c.delta < 0))
            throw std::invalid_argument("negative genus or delta on '" + label + "'");
        auto residual = adjunction_residual(label);
        if (residual && *residual != 0)
            throw calc_error(errc::adjunction_violation,
                             "adjunction fails on '" + label + "' (residual " + rational_string(*residual) + ")");
    }
}

void SurfaceLedger::define_divisor(const std::string& name, std::map<std::string, Rat> coeffs) {
    for (const auto& [label, coeff] : coeffs)
        if (!has_curve(label))
            throw calc_error(errc::unknown_reference, "divisor names unknown curve '" + label + "'");
    divisors[name] = std::move(coeffs);
}

SurfaceLedger blow_up(const SurfaceLedger& s, const std::vector<BlowUpCenter>& point,
                      const std::string& new_label) {
    if (s.has_curve(new_label)) throw std::invalid_argument("label '" + new_label + "' already in use");
    std::set<std::string> seen;
    for (const auto& c : point) {
        if (c.multiplicity < 1) throw std::invalid_argument("center multiplicity must be positive");
        if (!s.has_curve(c.curve)) throw calc_error(errc::unknown_reference, "no curve '" + c.curve + "'");
        if (!seen.insert(c.curve).second) throw std::invalid_argument("curve listed twice at the center");
    }

    SurfaceLedger out = s;
    for (const auto& c : point) {
        auto& cur = out.curves[c.curve];
        cur.self -= c.multiplicity * c.multiplicity;
        if (cur.delta) {
            *cur.delta -= binom2(c.multiplicity);
            if (*cur.delta < 0)
                throw calc_error(errc::inconsistent_incidence,
                                 "'" + c.curve + "' has no multiplicity-" + std::to_string(c.multiplicity) +
                                     " point left to blow up");
        }
    }
    for (std::size_t i = 0; i < point.size(); ++i)
        for (std::size_t j = i + 1; j < point.size(); ++j) {
            long v = s.intersection(point[i].curve, point[j].curve) -
                     point[i].multiplicity * point[j].multiplicity;
            if (v < 0)
                throw calc_error(errc::negative_intersection,
                                 point[i].curve + "." + point[j].curve + " drops below zero");
            out.set_intersection(point[i].curve, point[j].curve, v);
        }

    out.curves[new_label] = {0, Rat(-1), 0};
    Rat k_coeff = 1;
    for (const auto& c : point) {
        out.set_intersection(c.curve, new_label, c.multiplicity);
        k_coeff += Rat(c.multiplicity) * s.canonical_coeff(c.curve);
    }
    out.canonical[new_label] = k_coeff;
    for (auto& [name, div] : out.divisors) {
        Rat coeff = 0;
        for (const auto& c : point) {
            auto it = div.find(c.curve);
            if (it != div.end()) coeff += Rat(c.multiplicity) * it->second;
        }
        if (coeff != 0) div[new_label] = coeff;
    }
    out.euler += 1;
    out.validate();
    return out;
}

SurfaceLedger blow_down(const SurfaceLedger& s, const std::string& label) {
    const auto& e = s.curve(label);
    if (e.genus != 0 || e.self != -1 || !e.delta || *e.delta != 0)
        throw calc_error(errc::not_contractible, "'" + label + "' is not a smooth rational (-1)-curve");
    if (s.canonical_complete) {
        Rat ke = s.canonical_dot(label);
        if (ke != -1)
            throw calc_error(errc::adjunction_violation,
                             "K." + label + " = " + rational_string(ke) + ", expected -1");
    }

    SurfaceLedger out = s;
    std::map<std::string, long> meets;
    for (const auto& [lab, c] : s.curves) {
        if (lab == label) continue;
        long v = s.intersection(lab, label);
        if (v > 0) meets[lab] = v;
    }
    for (const auto& [a, va] : meets) {
        auto& cur = out.curves[a];
        cur.self += Rat(va) * va;
        if (cur.delta) *cur.delta += binom2(va);  // image acquires a delta-binom(v,2) point
        for (const auto& [b, vb] : meets) {
            if (a >= b) continue;
            out.set_intersection(a, b, s.intersection(a, b) + va * vb);
        }
    }
    out.curves.erase(label);
    for (auto it = out.crossings.begin(); it != out.crossings.end();)
        it = (it->first.first == label || it->first.second == label) ? out.crossings.erase(it) : std::next(it);
    out.canonical.erase(label);
    for (auto& [name, div] : out.divisors) div.erase(label);
    out.euler -= 1;
    out.validate();
    return out;
}

std::vector<long> hirzebruch_jung(long n, long q) {
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
        throw std::invalid_argument("need coprime 0 < q < n");
    std::vector<long> bs;
    while (q > 0) {
        long b = (n + q - 1) / q;  // ceil
        bs.push_back(b);
        std::tie(n, q) = std::make_pair(q, b * q - n);
    }
    return bs;
}

const CoverAnnotation::CurveData* CoverAnnotation::find(const std::string& label) const {
    auto it = curves.find(label);
    return it == curves.end() ? nullptr : &it->second;
}

namespace {

// solve M x = rhs for the chain intersection matrix (diagonal -b_i, 1 between
// neighbors); r is tiny, plain Gaussian elimination over Q
std::vector<Rat> solve_chain(const std::vector<long>& bs, std::vector<Rat> rhs) {
    const std::size_t r = bs.size();
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        m[i][i] = -bs[i];
        if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = 1;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (std::size_t j = 0; j < r; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < r; ++i) rhs[i] /= m[i][i];
    return rhs;
}

struct ChainSolve {
    std::vector<long> bs;
    std::vector<Rat> gamma;        // mu*(strict transform) coefficients, `first` end
    std::vector<Rat> delta;        // same for the `second` end
    std::vector<Rat> discrepancy;  // K_resolved = mu*K + sum a_i A_i
};

ChainSolve solve_hj(long n, long q) {
    ChainSolve cs;
    cs.bs = hirzebruch_jung(n, q);
    const std::size_t r = cs.bs.size();
    std::vector<Rat> e_first(r, 0), e_last(r, 0), adjunct(r, 0);
    e_first.front() = -1;
    e_last.back() = -1;
    for (std::size_t i = 0; i < r; ++i) adjunct[i] = cs.bs[i] - 2;
    cs.gamma = solve_chain(cs.bs, e_first);
    cs.delta = solve_chain(cs.bs, e_last);
    cs.discrepancy = solve_chain(cs.bs, adjunct);
    return cs;
}

struct CurvePlan {
    long rotation = 0;
    long e = 1;
    long k = 1;
    long mutual = 0;
    long genus_up = 0;
    std::vector<std::string> names;
};

}  // namespace

SurfaceLedger cyclic_cover(const SurfaceLedger& s, long degree, const std::string& branch,
                           const CoverAnnotation& ann) {
    s.validate();
    const long n = degree;
    if (n < 1) throw std::invalid_argument("cover degree must be positive");
    auto div_it = s.divisors.find(branch);
    if (div_it == s.divisors.end())
        throw calc_error(errc::unknown_reference, "no tracked divisor '" + branch + "'");
    if (n == 1) return s;

    for (const auto& [label, c] : s.curves) {
        if (!is_integer(c.self))
            throw calc_error(errc::integrality_violation,
                             "'" + label + "' has a non-integral self-intersection");
        if (!c.delta || *c.delta != 0)
            throw calc_error(errc::inconsistent_incidence,
                             "cover needs a smooth branch configuration; '" + label + "' is not known smooth");
    }

    // rotation residues: branch divisor coefficients mod n
    std::map<std::string, CurvePlan> plan;
    for (const auto& [label, c] : s.curves) {
        CurvePlan p;
        auto cit = div_it->second.find(label);
        if (cit != div_it->second.end()) {
            if (!is_integer(cit->second))
                throw calc_error(errc::integrality_violation,
                                 "branch coefficient of '" + label + "' is not an integer");
            p.rotation = static_cast<long>(to_i64(to_int(cit->second) % n));
            if (p.rotation < 0) p.rotation += n;
        }
        plan[label] = p;
    }

    auto in_support = [&](const std::string& label) { return plan.at(label).rotation != 0; };
    auto meets_support = [&](const std::string& label) {
        if (in_support(label)) return true;
        for (const auto& [other, p] : plan)
            if (p.rotation != 0 && s.intersection(label, other) > 0) return true;
        return false;
    };

    for (auto& [label, p] : plan) {
        const auto* data = ann.find(label);
        if (!data && meets_support(label))
            throw calc_error(errc::missing_annotation, "no cover annotation for '" + label + "'");
        long forced_e = p.rotation == 0 ? 1 : n / std::gcd(p.rotation, n);
        p.e = data ? data->ramification : 1;
        p.k = data ? data->components : 1;
        p.mutual = data ? data->mutual : 0;
        if (p.e != forced_e)
            throw calc_error(errc::ramification_mismatch,
                             "'" + label + "': ramification index " + std::to_string(p.e) +
                                 " inconsistent with the rotation data (expected " + std::to_string(forced_e) +
                                 ")");
        if (p.k < 1 || n % (p.k * p.e) != 0)
            throw calc_error(errc::ramification_mismatch,
                             "'" + label + "': k*e = " + std::to_string(p.k * p.e) + " does not divide n");
        if (p.mutual < 0 || (p.mutual > 0 && p.k != 2))
            throw calc_error(errc::ramification_mismatch,
                             "'" + label + "': conjugate intersections are only supported for k = 2");
        if (data && !data->names.empty() && static_cast<long>(data->names.size()) != p.k)
            throw std::invalid_argument("'" + label + "': component name list has wrong length");
        for (long i = 0; i < p.k; ++i) {
            if (data && !data->names.empty())
                p.names.push_back(data->names[static_cast<std::size_t>(i)]);
            else
                p.names.push_back(p.k == 1 ? label : label + "_" + std::to_string(i));
        }
    }

    // branch nodes: transversal when each downstairs point lifts to
    // n/(e_a e_b) points matching the meridian orders; otherwise the node
    // carries a quotient singularity and needs its Hirzebruch-Jung chain
    std::map<std::pair<std::string, std::string>, const CoverAnnotation::NodeChain*> chain_at;
    for (const auto& ch : ann.chains) {
        if (!s.has_curve(ch.first) || !s.has_curve(ch.second))
            throw calc_error(errc::unknown_reference, "chain endpoints must be tracked curves");
        if (ch.first == ch.second) throw std::invalid_argument("chain endpoints must differ");
        if (!chain_at.emplace(key(ch.first, ch.second), &ch).second)
            throw std::invalid_argument("duplicate chain annotation");
    }
    for (const auto& [labels, chp] : chain_at) {
        const auto& [a, b] = labels;
        if (!in_support(a) || !in_support(b) || s.intersection(a, b) == 0)
            throw calc_error(errc::ramification_mismatch,
                             "chain endpoints " + a + ", " + b + " do not meet inside the branch locus");
    }
    for (const auto& [labels, v] : s.crossings) {
        const auto& [a, b] = labels;
        if (!in_support(a) || !in_support(b)) continue;
        const CurvePlan& pa = plan.at(a);
        const CurvePlan& pb = plan.at(b);
        long ee = pa.e * pb.e;
        bool plain = (ee <= n) && (n % ee == 0) && (n / ee == std::gcd(pb.rotation, n / pa.e)) &&
                     (n / ee == std::gcd(pa.rotation, n / pb.e));
        auto chain = chain_at.find(labels);
        if (plain && chain != chain_at.end())
            throw calc_error(errc::ramification_mismatch, "chain annotated at a transversal node " + a + "." + b);
        if (!plain) {
            if (chain == chain_at.end())
                throw calc_error(errc::missing_annotation,
                                 "node " + a + "." + b + " needs a Hirzebruch-Jung insertion");
            const auto& ch = *chain->second;
            if (pa.k != 1 || pb.k != 1)
                throw calc_error(errc::ramification_mismatch, "chains need unsplit branch curves");
            if (std::gcd(std::gcd(pa.rotation, pb.rotation), n) != 1)
                throw calc_error(errc::ramification_mismatch,
                                 "node " + a + "." + b + " lifts to several singular points (unsupported)");
            if (ee % n != 0 || ee / n != ch.n)
                throw calc_error(errc::ramification_mismatch,
                                 "chain type at " + a + "." + b +
                                     " violates the projection formula; its order must be e_a*e_b/n = " +
                                     std::to_string(ee % n == 0 ? ee / n : -1));
        }
    }

    // Riemann-Hurwitz along each curve: the reduced preimage covers with
    // degree n/e, ramified over the intersections with the rest of the branch
    for (auto& [label, p] : plan) {
        const auto& c = s.curves.at(label);
        long deg = n / p.e;
        long chi_up = deg * (2 - 2 * c.genus);
        for (const auto& [other, po] : plan) {
            if (other == label || po.rotation == 0) continue;
            long pts = s.intersection(label, other);
            if (pts == 0) continue;
            chi_up -= pts * (deg - std::gcd(po.rotation, deg));
        }
        long two_k = 2 * p.k;
        long genus2_num = 2 * p.k - chi_up;  // = 2 k g
        if (genus2_num % two_k != 0 || genus2_num < 0)
            throw calc_error(errc::integrality_violation,
                             "'" + label + "' would split into " + std::to_string(p.k) +
                                 " components of non-integral or negative genus");
        p.genus_up = genus2_num / two_k;
    }

    SurfaceLedger out;
    out.canonical_complete = s.canonical_complete;

    auto add_curve = [&](const std::string& label, long genus, const Rat& self) {
        if (out.has_curve(label)) throw std::invalid_argument("upstairs label collision '" + label + "'");
        out.curves[label] = {genus, self, 0};
    };

    // pi*C as a coefficient vector over upstairs curves; feeds the projection
    // gate and the canonical/divisor transport
    std::map<std::string, std::map<std::string, Rat>> pullback;

    for (const auto& [label, p] : plan) {
        const auto& c = s.curves.at(label);
        Rat strict_self = (Rat(n) * c.self - Rat(2 * p.mutual) * p.e * p.e) / (p.k * p.e * p.e);
        for (long i = 0; i < p.k; ++i) {
            add_curve(p.names[static_cast<std::size_t>(i)], p.genus_up, strict_self);
            pullback[label][p.names[static_cast<std::size_t>(i)]] = p.e;
        }
        if (p.mutual > 0) out.set_intersection(p.names[0], p.names[1], p.mutual);
    }

    // quotient-singularity chains, one per downstairs node
    struct ChainInstance {
        std::string first, second;
        ChainSolve solve;
        std::vector<std::vector<std::string>> names;  // per node point, per chain curve
    };
    std::vector<ChainInstance> instances;
    for (const auto& [labels, chp] : chain_at) {
        const auto& ch = *chp;
        ChainInstance inst{ch.first, ch.second, solve_hj(ch.n, ch.q), {}};
        const std::size_t r = inst.solve.bs.size();
        long pts = s.intersection(ch.first, ch.second);
        if (!ch.names.empty() && static_cast<long>(ch.names.size()) != pts)
            throw std::invalid_argument("chain needs one name list per intersection point");
        for (long pt = 0; pt < pts; ++pt) {
            std::vector<std::string> names;
            if (!ch.names.empty()) {
                if (ch.names[static_cast<std::size_t>(pt)].size() != r)
                    throw std::invalid_argument("chain name list has wrong length");
                names = ch.names[static_cast<std::size_t>(pt)];
            } else {
                for (std::size_t i = 0; i < r; ++i)
                    names.push_back(ch.first + "." + ch.second + ".hj" + std::to_string(pt) + "." +
                                    std::to_string(i));
            }
            inst.names.push_back(names);
        }
        instances.push_back(std::move(inst));
    }
    for (const auto& inst : instances) {
        const std::size_t r = inst.solve.bs.size();
        const std::string& eps_first = plan.at(inst.first).names[0];
        const std::string& eps_second = plan.at(inst.second).names[0];
        for (const auto& names : inst.names) {
            for (std::size_t i = 0; i < r; ++i) {
                add_curve(names[i], 0, Rat(-inst.solve.bs[i]));
                pullback[inst.first][names[i]] = Rat(plan.at(inst.first).e) * inst.solve.gamma[i];
                pullback[inst.second][names[i]] = Rat(plan.at(inst.second).e) * inst.solve.delta[i];
                if (i + 1 < r) out.set_intersection(names[i], names[i + 1], 1);
            }
            out.set_intersection(eps_first, names.front(), 1);
            out.set_intersection(eps_second, names.back(), 1);
            // strict transforms absorb the mu* correction at the attached end
            out.curves[eps_first].self -= inst.solve.gamma.front();
            out.curves[eps_second].self -= inst.solve.delta.back();
        }
    }

    for (const auto& [label, c] : out.curves)
        if (!is_integer(c.self))
            throw calc_error(errc::integrality_violation,
                             "upstairs self-intersection of '" + label + "' is not an integer (" +
                                 rational_string(c.self) + ")");

    // remaining intersections distribute diagonally over conjugate components
    for (const auto& [labels, v] : s.crossings) {
        const auto& [a, b] = labels;
        if (chain_at.count(labels)) continue;
        const CurvePlan& pa = plan.at(a);
        const CurvePlan& pb = plan.at(b);
        Rat total = Rat(n) * v / Rat(pa.e * pb.e);
        if (!is_integer(total))
            throw calc_error(errc::integrality_violation,
                             "pullback of the node " + a + "." + b + " is not an integer cycle");
        long t = static_cast<long>(to_i64(to_int(total)));
        long l = std::lcm(pa.k, pb.k);
        long g = std::gcd(pa.k, pb.k);
        if (t % l != 0)
            throw calc_error(errc::integrality_violation,
                             "preimages of " + a + "." + b + " do not distribute over conjugates");
        for (long i = 0; i < pa.k; ++i)
            for (long j = 0; j < pb.k; ++j)
                if (i % g == j % g)
                    out.set_intersection(pa.names[static_cast<std::size_t>(i)],
                                         pb.names[static_cast<std::size_t>(j)], t / l);
    }

    // canonical divisor: K_up = sum kappa_C mu*(components of C) + discrepancies
    std::map<std::string, Rat> kappa;
    for (const auto& [label, p] : plan)
        kappa[label] = Rat(p.e) * s.canonical_coeff(label) + Rat(p.rotation != 0 ? p.e - 1 : 0);
    for (const auto& [label, p] : plan) {
        if (kappa[label] == 0) continue;
        for (long i = 0; i < p.k; ++i) out.canonical[p.names[static_cast<std::size_t>(i)]] = kappa[label];
    }
    for (const auto& inst : instances) {
        const std::size_t r = inst.solve.bs.size();
        for (const auto& names : inst.names)
            for (std::size_t i = 0; i < r; ++i) {
                Rat coeff = kappa[inst.first] * inst.solve.gamma[i] +
                            kappa[inst.second] * inst.solve.delta[i] + inst.solve.discrepancy[i];
                if (coeff != 0) out.canonical[names[i]] = coeff;
            }
    }

    // tracked divisors pull back through the same transport
    for (const auto& [name, div] : s.divisors) {
        std::map<std::string, Rat> up;
        for (const auto& [label, coeff] : div) {
            if (coeff == 0) continue;
            for (const auto& [uplabel, w] : pullback.at(label)) {
                Rat v = coeff * w;
                if (v != 0) up[uplabel] += v;
            }
        }
        for (auto it = up.begin(); it != up.end();) it = (it->second == 0) ? up.erase(it) : std::next(it);
        out.divisors[name] = std::move(up);
    }

    // Euler characteristic: n chi(S - R) + chi(preimage of R)
    long chi_r_down = 0, chi_r_up = 0;
    for (const auto& [label, p] : plan) {
        if (p.rotation == 0) continue;
        chi_r_down += 2 - 2 * s.curves.at(label).genus;
        chi_r_up += p.k * (2 - 2 * p.genus_up);
        chi_r_up -= p.mutual;
    }
    for (const auto& [labels, v] : s.crossings) {
        const auto& [a, b] = labels;
        if (!in_support(a) || !in_support(b)) continue;
        chi_r_down -= v;
        if (chain_at.count(labels)) continue;
        long t = static_cast<long>(to_i64(to_int(Rat(n) * v / Rat(plan.at(a).e * plan.at(b).e))));
        chi_r_up -= t;
    }
    for (const auto& inst : instances) {
        long r = static_cast<long>(inst.solve.bs.size());
        long pts = static_cast<long>(inst.names.size());
        chi_r_up += pts * 2 * r;        // rational chain curves
        chi_r_up -= pts * (r + 1);      // chain adjacencies
    }
    out.euler = n * (s.euler - chi_r_down) + chi_r_up;

    // primary consistency gate: (pi*C).(pi*D) = n (C.D) from the built data
    auto updot = [&](const std::map<std::string, Rat>& u, const std::map<std::string, Rat>& w) {
        Rat dot = 0;
        for (const auto& [la, ca] : u)
            for (const auto& [lb, cb] : w)
                dot += ca * cb * (la == lb ? out.curves.at(la).self : Rat(out.intersection(la, lb)));
        return dot;
    };
    for (const auto& [a, pa] : plan)
        for (const auto& [b, pb] : plan) {
            if (b < a) continue;
            Rat expect = Rat(n) * (a == b ? s.curves.at(a).self : Rat(s.intersection(a, b)));
            if (updot(pullback.at(a), pullback.at(b)) != expect)
                throw calc_error(errc::ramification_mismatch,
                                 "(pi*" + a + ").(pi*" + b + ") != " + std::to_string(n) + "*(" + a + "." +
                                     b + "): annotation is inconsistent");
        }

    out.validate();
    return out;
}

CanonicalReport canonical_report(const SurfaceLedger& s, std::optional<long> first_betti) {
    CanonicalReport rep;
    rep.euler = s.euler;
    rep.canonical_complete = s.canonical_complete;
    rep.canonical_trivial = s.canonical_trivial();
    rep.first_betti = first_betti;
    for (const auto& [label, c] : s.curves) {
        CanonicalReport::Row row;
        row.label = label;
        row.genus = c.genus;
        row.delta = c.delta;
        row.self = c.self;
        row.canonical_dot = s.canonical_dot(label);
        row.adjunction_residual = s.adjunction_residual(label);
        rep.rows.push_back(std::move(row));
    }
    if (rep.canonical_trivial && rep.euler == 0)
        rep.kodaira_hint = (first_betti && *first_betti == 4) ? "torus" : "torus or bielliptic";
    return rep;
}

}  // namespace orbipencil
