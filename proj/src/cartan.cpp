#include "qhs/cartan.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace qhs {

void CartanDatum::validate() const {
    auto fail = [](const std::string& msg) { throw config_error("cartan datum: " + msg); };
    if (rank <= 0) fail("empty index set");
    if ((int)a.size() != rank || (int)s.size() != rank || (int)parity.size() != rank)
        fail("field sizes do not match the rank");
    for (int i = 0; i < rank; ++i) {
        if ((int)a[i].size() != rank) fail("cartan matrix is not square");
        if (a[i][i] != 2) {
            std::ostringstream os;
            os << "a[" << i + 1 << "][" << i + 1 << "] must be 2";
            fail(os.str());
        }
        if (s[i] <= 0) fail("symmetrizers must be positive");
        if (parity[i] != 0 && parity[i] != 1) fail("parity entries must be 0 or 1");
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i != j && a[i][j] > 0) {
                std::ostringstream os;
                os << "a[" << i + 1 << "][" << j + 1 << "] must be <= 0 off the diagonal";
                fail(os.str());
            }
            if (i != j && (a[i][j] == 0) != (a[j][i] == 0)) {
                std::ostringstream os;
                os << "a[" << i + 1 << "][" << j + 1 << "] = 0 requires a[" << j + 1
                   << "][" << i + 1 << "] = 0";
                fail(os.str());
            }
            if (s[i] * a[i][j] != s[j] * a[j][i]) {
                std::ostringstream os;
                os << "not symmetrizable at (" << i + 1 << "," << j + 1 << ")";
                fail(os.str());
            }
            if (parity[i] == 1 && a[i][j] % 2 != 0) {
                std::ostringstream os;
                os << "coloring: odd node " << i + 1 << " needs even a[" << i + 1
                   << "][" << j + 1 << "]";
                fail(os.str());
            }
        }
}

CartanDatum preset_datum(const std::string& name) {
    CartanDatum d;
    d.name = name;
    if (name == "A1") {
        d.rank = 1; d.a = {{2}}; d.s = {1}; d.parity = {0};
    } else if (name == "A1odd") {
        d.rank = 1; d.a = {{2}}; d.s = {1}; d.parity = {1};
    } else if (name == "A2") {
        d.rank = 2; d.a = {{2, -1}, {-1, 2}}; d.s = {1, 1}; d.parity = {0, 0};
    } else if (name == "B2odd") {
        // rank-2 colored datum: node 1 odd, a_{12} = -2
        d.rank = 2; d.a = {{2, -2}, {-1, 2}}; d.s = {1, 2}; d.parity = {1, 0};
    } else {
        throw config_error("unknown preset '" + name + "'");
    }
    d.validate();
    return d;
}

std::vector<std::string> preset_names() { return {"A1", "A1odd", "A2", "B2odd"}; }

Weight Weight::fundamental_combination(std::vector<int> coeffs) {
    Weight w;
    w.lam = std::move(coeffs);
    w.al.assign(w.lam.size(), 0);
    return w;
}

Weight Weight::root_sum(std::vector<int> counts) {
    Weight w;
    w.al = std::move(counts);
    w.lam.assign(w.al.size(), 0);
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < lam.size(); ++i) { r.lam[i] += o.lam[i]; r.al[i] += o.al[i]; }
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < lam.size(); ++i) { r.lam[i] -= o.lam[i]; r.al[i] -= o.al[i]; }
    return r;
}

int coroot_pair(const CartanDatum& d, int i, const Weight& w) {
    if (i < 0 || i >= d.rank) throw std::out_of_range("coroot_pair: unknown index");
    int v = w.lam[i];
    for (int j = 0; j < d.rank; ++j) v += d.a[i][j] * w.al[j];
    return v;
}

int alpha_pair(const CartanDatum& d, int i, const Weight& w) {
    return d.s[i] * coroot_pair(d, i, w);
}

bool is_dominant(const CartanDatum& d, const Weight& w) {
    for (int i = 0; i < d.rank; ++i)
        if (coroot_pair(d, i, w) < 0) return false;
    return true;
}

int height(const RootVec& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

bool in_Qplus(const RootVec& beta) {
    for (int k : beta) if (k < 0) return false;
    return true;
}

Weight to_weight(const RootVec& beta) {
    Weight w((int)beta.size());
    w.al = beta;
    return w;
}

int parity_of(const CartanDatum& d, const RootVec& beta) {
    int p = 0;
    for (int i = 0; i < d.rank; ++i) p += d.parity[i] * beta[i];
    return p & 1;
}

int alpha_pair(const CartanDatum& d, int i, const RootVec& beta) {
    int v = 0;
    for (int j = 0; j < d.rank; ++j) v += d.sym(i, j) * beta[j];
    return v;
}

std::vector<RootVec> qplus_of_height(int rank, int h) {
    std::vector<RootVec> out;
    RootVec cur(rank, 0);
    // lexicographic enumeration of compositions of h into rank parts
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == rank - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            cur[pos] = k;
            rec(pos + 1, rem - k);
        }
    };
    if (rank > 0 && h >= 0) rec(0, h);
    return out;
}

} // namespace qhs
