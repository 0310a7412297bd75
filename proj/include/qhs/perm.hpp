#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace qhs {

// Permutations of {0,...,n-1} in one-line notation: p[k] = image of k.
// Words are sequences of 0-based simple transposition letters; letter a
// stands for s_a = (a, a+1).
using Perm = std::vector<uint8_t>;
using Word = std::vector<uint8_t>;

Perm identity_perm(int n);
Perm perm_of_word(const Word& w, int n);
Perm transposition(int a, int n);
Perm compose(const Perm& p, const Perm& q);  // p after q
Perm inverse(const Perm& p);
int coxeter_length(const Perm& p);           // inversion count
bool is_left_descent(const Perm& p, int a);  // l(s_a p) < l(p)
Perm left_mul(int a, const Perm& p);         // s_a * p
Perm right_mul(const Perm& p, int a);        // p * s_a

// Apply w to an index sequence: (w.nu)[w(k)] = nu[k].
template <typename Seq>
Seq act(const Perm& w, const Seq& nu) {
    Seq out = nu;
    for (size_t k = 0; k < nu.size(); ++k) out[w[k]] = nu[k];
    return out;
}

// Lexicographically smallest reduced word; cached per permutation.
const Word& canonical_word(const Perm& p);

std::vector<Perm> all_perms(int n);
Perm longest_element(int n);

// A sequence of elementary moves turning one reduced word of w into
// another.  Commutation moves swap two adjacent letters that differ by
// at least 2; braid moves rewrite (a+1, a, a+1) <-> (a, a+1, a).
struct WordMove {
    enum Kind { Commute, Braid } kind;
    int pos;  // leftmost position affected
};
std::vector<WordMove> move_path(const Word& from, const Word& to);

} // namespace qhs
