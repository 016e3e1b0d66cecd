#include "orbipencil/resolution.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "orbipencil/errors.hpp"

namespace orbipencil {

long ResolutionGraph::total_branches() const {
    long b = 0;
    for (const auto& a : arrows) b += a.branches;
    return b;
}

long ResolutionGraph::valence(int id) const {
    long v = 0;
    for (const auto& [a, b] : edges) v += (a == id) + (b == id);
    for (const auto& a : arrows)
        if (a.vertex == id) v += a.branches;
    return v;
}

void ResolutionGraph::validate() const {
    if (vertices.empty()) throw calc_error(errc::malformed_graph, "empty graph");
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!index.emplace(vertices[i].id, i).second)
            throw calc_error(errc::malformed_graph, "duplicate vertex id");
        if (vertices[i].self_int > -1) throw calc_error(errc::malformed_graph, "self-intersection must be <= -1");
        if (vertices[i].multiplicity < 1) throw calc_error(errc::malformed_graph, "nonpositive multiplicity");
        if (vertices[i].genus < 0) throw calc_error(errc::malformed_graph, "negative genus");
    }
    for (const auto& [a, b] : edges)
        if (!index.count(a) || !index.count(b) || a == b)
            throw calc_error(errc::malformed_graph, "edge endpoints invalid");
    for (const auto& a : arrows)
        if (!index.count(a.vertex) || a.branches < 1)
            throw calc_error(errc::malformed_graph, "arrow invalid");

    // connectivity
    std::set<int> seen{vertices.front().id};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& [a, b] : edges) {
            if (seen.count(a) && seen.insert(b).second) grew = true;
            if (seen.count(b) && seen.insert(a).second) grew = true;
        }
    }
    if (seen.size() != vertices.size()) throw calc_error(errc::malformed_graph, "graph is disconnected");

    // m_i * (-E_i^2) = sum of adjacent multiplicities + branch count
    for (const auto& v : vertices) {
        long rhs = 0;
        for (const auto& [a, b] : edges) {
            if (a == v.id) rhs += vertices[index[b]].multiplicity;
            if (b == v.id) rhs += vertices[index[a]].multiplicity;
        }
        for (const auto& a : arrows)
            if (a.vertex == v.id) rhs += a.branches;
        if (v.multiplicity * (-v.self_int) != rhs)
            throw calc_error(errc::malformed_graph,
                             "adjacency relation fails at vertex " + std::to_string(v.id));
    }
}

namespace {

struct Ray {
    long x, y;
};

long det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

// lattice rays strictly inside cone(a, b) forming the minimal regular
// subdivision; each inserted ray is the hull neighbor of its predecessor
std::vector<Ray> subdivide(Ray a, const Ray& b) {
    std::vector<Ray> inserted;
    while (det(a, b) > 1) {
        // primitive c with det(a, c) = 1, minimal inside the cone
        long x, y;
        {
            // extended Euclid for a.x * y - a.y * x = 1
            long r0 = a.x, r1 = a.y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                long q = r0 / r1;
                std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
            }
            // r0 = gcd = 1 since a primitive: a.x * s0 + a.y * t0 = 1
            y = s0;
            x = -t0;
        }
        Ray c{x, y};
        // shift by multiples of a until c is the first ray on b's side
        long d = det(c, b);
        long n = det(a, b);
        long k = d >= 0 ? -(d / n) : (-d + n - 1) / n;
        c.x += k * a.x;
        c.y += k * a.y;
        inserted.push_back(c);
        a = c;
    }
    return inserted;
}

}  // namespace

ResolutionGraph resolution_graph(long p, long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("resolution graph needs p, q >= 2");
    if (p > q) std::swap(p, q);
    const long g = std::gcd(p, q);
    const Ray e1{1, 0}, e2{0, 1};
    const Ray v{q / g, p / g};

    std::vector<Ray> rays;
    for (const Ray& r : subdivide(e1, v)) rays.push_back(r);
    const int rupture = static_cast<int>(rays.size());
    rays.push_back(v);
    for (const Ray& r : subdivide(v, e2)) rays.push_back(r);

    ResolutionGraph graph;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Ray prev = i == 0 ? e1 : rays[i - 1];
        const Ray next = i + 1 == rays.size() ? e2 : rays[i + 1];
        // prev + next = c * ray with c = -E^2 (smooth toric surface)
        long cx = prev.x + next.x, cy = prev.y + next.y;
        long c = rays[i].x != 0 ? cx / rays[i].x : cy / rays[i].y;
        long m = std::min(p * rays[i].x, q * rays[i].y);
        graph.vertices.push_back({static_cast<int>(i), -c, 0, m});
        if (i > 0) graph.edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
    }
    graph.arrows.push_back({rupture, g});
    graph.validate();
    return graph;
}

LaurentPoly acampo_charpoly(const ResolutionGraph& g, long branches) {
    g.validate();
    if (branches != g.total_branches())
        throw calc_error(errc::malformed_graph, "branch count disagrees with graph arrows");

    // det(1 - t T | H^1) = (1 - t) * prod (1 - t^{m_i})^{-chi(E_i°)}
    std::map<long, long> exponent;  // of (1 - t^m)
    exponent[1] += 1;
    for (const auto& v : g.vertices) {
        long chi_open = 2 - 2 * v.genus - g.valence(v.id);
        exponent[v.multiplicity] -= chi_open;
    }
    LaurentPoly numer(1), denom(1);
    for (const auto& [m, e] : exponent) {
        if (e == 0) continue;
        LaurentPoly f = (LaurentPoly(1) - LaurentPoly::t(m)).pow(static_cast<unsigned long>(std::abs(e)));
        (e > 0 ? numer : denom) = (e > 0 ? numer : denom) * f;
    }
    LaurentPoly det = poly_exact_div(numer, denom);
    return det.reversed().unit_normal();
}

}  // namespace orbipencil
