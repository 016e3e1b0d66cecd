#include "orbipencil/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbipencil {

Int AbelianGroupInvariants::order() const {
    if (free_rank > 0) throw std::logic_error("group is infinite");
    Int o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

std::string AbelianGroupInvariants::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < free_rank; ++i) {
        if (!first) os << " + ";
        os << "Z";
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// classical elimination: move the smallest nonzero entry of the lower-right
// block to the pivot, reduce its row and column, fix up divisibility
void smith_diagonalize(IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t s = 0; s < steps; ++s) {
        for (;;) {
            std::size_t pr = s, pc = s;
            Int best = 0;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                        best = abs(m[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (best == 0) return;  // rest of the block is zero
            std::swap(m[s], m[pr]);
            if (pc != s)
                for (auto& row : m) std::swap(row[s], row[pc]);

            bool reduced = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                Int q = m[i][s] / m[s][s];
                if (q != 0)
                    for (std::size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
                if (m[i][s] != 0) reduced = false;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                Int q = m[s][j] / m[s][s];
                if (q != 0)
                    for (std::size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
                if (m[s][j] != 0) reduced = false;
            }
            if (!reduced) continue;

            // pivot must divide everything below-right
            bool divides_all = true;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < cols && divides_all; ++j)
                    if (m[i][j] % m[s][s] != 0) {
                        for (std::size_t jj = s; jj < cols; ++jj) m[s][jj] += m[i][jj];
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (m[s][s] < 0) m[s][s] = -m[s][s];
    }
}

}  // namespace

AbelianGroupInvariants smith_normal_form(const IntMatrix& relations, std::size_t cols) {
    IntMatrix m;
    m.reserve(relations.size());
    for (const auto& row : relations) {
        if (row.size() > cols) throw std::invalid_argument("relation wider than generator count");
        std::vector<Int> r(cols, 0);
        std::copy(row.begin(), row.end(), r.begin());
        m.push_back(std::move(r));
    }
    smith_diagonalize(m);
    AbelianGroupInvariants out;
    std::size_t rank = 0;
    for (std::size_t s = 0; s < std::min(m.size(), cols); ++s) {
        if (m[s][s] == 0) break;
        ++rank;
        if (m[s][s] > 1) out.torsion.push_back(m[s][s]);
    }
    out.free_rank = static_cast<long>(cols - rank);
    return out;
}

AbelianGroupInvariants smith_normal_form(const IntMatrix& relations) {
    std::size_t cols = 0;
    for (const auto& row : relations) cols = std::max(cols, row.size());
    return smith_normal_form(relations, cols);
}

}  // namespace orbipencil
