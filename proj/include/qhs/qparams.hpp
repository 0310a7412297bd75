#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qhs/cartan.hpp"
#include "qhs/rational.hpp"

namespace qhs {

// One term t_{i,j;(r,s)} w^r z^s of Q_{i,j}(w,z).
struct QTerm {
    int r, s;
    Rat coeff;
};

// The parameter matrix (Q_{i,j})_{i,j}.  Entries are stored once per
// unordered pair {i,j}; Q_{j,i}(z,w) = Q_{i,j}(w,z) is derived.
class QParams {
public:
    // Validated constructor; throws config_error naming the offending
    // (i,j,r,s) on any violation.
    static QParams build(const CartanDatum& d,
                         const std::map<std::tuple<int, int, int, int>, Rat>& table);
    // Q_{i,j}(w,z) = w^{-a_ij} + z^{-a_ji} for i != j.
    static QParams default_for(const CartanDatum& d);

    // Terms of Q_{i,j}(w,z); empty when i == j.
    std::vector<QTerm> terms(int i, int j) const;

    const std::map<std::tuple<int, int, int, int>, Rat>& raw() const { return t_; }

private:
    std::map<std::tuple<int, int, int, int>, Rat> t_;  // key (i,j,r,s), i < j
};

} // namespace qhs
