#pragma once

#include <string>
#include <vector>
#include <stdexcept>

namespace qhs {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an instance exceeds a configured scale guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cartan datum with a parity coloring of the index set.  Indices are
// 0-based internally; the CLI presents them 1-based.
struct CartanDatum {
    std::string name;
    int rank = 0;
    std::vector<std::vector<int>> a;  // Cartan matrix a_{ij}
    std::vector<int> s;               // symmetrizers s_i > 0
    std::vector<int> parity;          // p(i) in {0,1}

    // (alpha_i | alpha_j) = s_i a_{ij}
    int sym(int i, int j) const { return s[i] * a[i][j]; }
    int p(int i) const { return parity[i]; }
    bool odd(int i) const { return parity[i] == 1; }

    // Throws config_error naming the violated axiom.
    void validate() const;
};

CartanDatum preset_datum(const std::string& name);  // A1, A1odd, A2, B2odd
std::vector<std::string> preset_names();

// Integral weight written over the fundamental weights and simple roots:
//   w = sum lam[i] * Lambda_i + sum al[i] * alpha_i.
struct Weight {
    std::vector<int> lam;
    std::vector<int> al;

    Weight() = default;
    explicit Weight(int rank) : lam(rank, 0), al(rank, 0) {}
    static Weight fundamental_combination(std::vector<int> coeffs);
    static Weight root_sum(std::vector<int> counts);  // element of Q+

    int rank() const { return static_cast<int>(lam.size()); }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const { return lam == o.lam && al == o.al; }
    bool operator<(const Weight& o) const
    { return lam != o.lam ? lam < o.lam : al < o.al; }
};

// <h_i, w>
int coroot_pair(const CartanDatum& d, int i, const Weight& w);
// (alpha_i | w) = s_i <h_i, w>
int alpha_pair(const CartanDatum& d, int i, const Weight& w);
bool is_dominant(const CartanDatum& d, const Weight& w);

// Q+ elements as plain count vectors.
using RootVec = std::vector<int>;
int height(const RootVec& beta);
bool in_Qplus(const RootVec& beta);
Weight to_weight(const RootVec& beta);
int parity_of(const CartanDatum& d, const RootVec& beta);
// (alpha_i | beta) for beta in Q+
int alpha_pair(const CartanDatum& d, int i, const RootVec& beta);

// All beta in Q+ of the given height.
std::vector<RootVec> qplus_of_height(int rank, int h);

} // namespace qhs
