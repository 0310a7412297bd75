#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "qhs/cartan.hpp"
#include "qhs/qparams.hpp"
#include "qhs/rational.hpp"

// Independent ground truth.  Nothing in this namespace touches the
// rewriting engine: multiplicities come from the Freudenthal recursion and
// graded dimensions from imposing the defining relations as linear
// syzygies on a free word space.
namespace qhs::oracle {

// dim V(Lambda)_{Lambda - beta} at q = 1; presets are rank <= 2 of finite
// type.  Throws config_error for unsupported data.
long weight_multiplicity(const CartanDatum& d, const std::vector<int>& Lambda,
                         const RootVec& beta);

// All positive roots of a rank <= 2 finite-type datum, as Q+ vectors.
std::vector<RootVec> positive_roots(const CartanDatum& d);

struct BruteForceOptions {
    int len_bound = 7;
    long word_limit = 2000000;  // explosion guard
    bool check_stability = true;
};

struct BruteForceResult {
    // (degree, parity) -> dimension, summed over idempotent pairs
    std::map<std::pair<int, int>, long> dims;
    // (left component, right component, degree, parity) -> dimension
    std::map<std::tuple<uint32_t, uint32_t, int, int>, long> by_pair;
    bool stable = true;
};

// Graded dimensions of R(beta) (or R^Lambda(beta) when Lambda is given) on
// the degree window [lo, hi], by dense elimination of relation syzygies in
// the span of generator words of length <= len_bound.
BruteForceResult brute_force_graded_dim(const CartanDatum& d, const QParams& qp,
                                        const std::optional<std::vector<int>>& Lambda,
                                        const RootVec& beta, int lo, int hi,
                                        const BruteForceOptions& opts = {});

} // namespace qhs::oracle
