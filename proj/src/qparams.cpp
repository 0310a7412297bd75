#include "qhs/qparams.hpp"

#include <sstream>

namespace qhs {

namespace {
[[noreturn]] void reject(int i, int j, int r, int s, const std::string& why) {
    std::ostringstream os;
    os << "qparams: entry (i=" << i + 1 << ", j=" << j + 1 << ", r=" << r
       << ", s=" << s << ") " << why;
    throw config_error(os.str());
}
} // namespace

QParams QParams::build(const CartanDatum& d,
                       const std::map<std::tuple<int, int, int, int>, Rat>& table) {
    QParams qp;
    // Normalize to i < j, checking the symmetry t_{i,j;(r,s)} = t_{j,i;(s,r)}
    // when both orders were supplied.
    for (const auto& [key, c] : table) {
        auto [i, j, r, s] = key;
        if (i < 0 || i >= d.rank || j < 0 || j >= d.rank)
            reject(i, j, r, s, "has an unknown index");
        if (i == j) reject(i, j, r, s, "is diagonal; Q_{i,i} = 0 is forced");
        if (r < 0 || s < 0) reject(i, j, r, s, "has a negative exponent");
        auto norm = (i < j) ? std::make_tuple(i, j, r, s) : std::make_tuple(j, i, s, r);
        auto it = qp.t_.find(norm);
        if (it != qp.t_.end()) {
            if (it->second != c) reject(i, j, r, s, "breaks t_{i,j;(r,s)} = t_{j,i;(s,r)}");
        } else if (c != 0) {
            qp.t_.emplace(norm, c);
        }
    }
    // Invariants.
    for (const auto& [key, c] : qp.t_) {
        auto [i, j, r, s] = key;
        if (d.odd(i) && r % 2 != 0) reject(i, j, r, s, "violates oddness (r must be even)");
        if (d.odd(j) && s % 2 != 0) reject(j, i, s, r, "violates oddness (r must be even)");
        // With the base ring concentrated in degree 0 the coefficients live on
        // the homogeneity line -2(ai|aj) = r(ai|ai) + s(aj|aj).
        if (-2 * d.sym(i, j) != r * d.sym(i, i) + s * d.sym(j, j))
            reject(i, j, r, s, "is off the homogeneity line");
    }
    for (int i = 0; i < d.rank; ++i)
        for (int j = i + 1; j < d.rank; ++j) {
            auto lead = qp.t_.find(std::make_tuple(i, j, -d.a[i][j], 0));
            if (lead == qp.t_.end() || lead->second == 0)
                reject(i, j, -d.a[i][j], 0, "must be nonzero (leading coefficient)");
        }
    return qp;
}

QParams QParams::default_for(const CartanDatum& d) {
    std::map<std::tuple<int, int, int, int>, Rat> table;
    for (int i = 0; i < d.rank; ++i)
        for (int j = i + 1; j < d.rank; ++j) {
            table[{i, j, -d.a[i][j], 0}] += 1;
            table[{i, j, 0, -d.a[j][i]}] += 1;
        }
    return build(d, table);
}

std::vector<QTerm> QParams::terms(int i, int j) const {
    std::vector<QTerm> out;
    if (i == j) return out;
    for (const auto& [key, c] : t_) {
        auto [a, b, r, s] = key;
        if (a == i && b == j) out.push_back({r, s, c});
        else if (a == j && b == i) out.push_back({s, r, c});
    }
    return out;
}

} // namespace qhs
