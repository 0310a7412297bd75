#include "qhs/perm.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qhs {

Perm identity_perm(int n) {
    Perm p(n);
    for (int k = 0; k < n; ++k) p[k] = (uint8_t)k;
    return p;
}

Perm perm_of_word(const Word& w, int n) {
    // word (i1,...,il) -> s_{i1} s_{i2} ... s_{il}, rightmost applied first
    Perm p = identity_perm(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = left_mul(*it, p);
    return p;
}

Perm transposition(int a, int n) {
    Perm p = identity_perm(n);
    std::swap(p[a], p[a + 1]);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t k = 0; k < p.size(); ++k) r[p[k]] = (uint8_t)k;
    return r;
}

int coxeter_length(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

bool is_left_descent(const Perm& p, int a) {
    // l(s_a p) < l(p) iff a appears after a+1 in the one-line word,
    // i.e. p^{-1}(a) > p^{-1}(a+1).
    int pa = -1, pa1 = -1;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == a) pa = (int)k;
        if (p[k] == a + 1) pa1 = (int)k;
    }
    return pa > pa1;
}

Perm left_mul(int a, const Perm& p) {
    Perm r = p;
    for (auto& v : r) {
        if (v == a) v = (uint8_t)(a + 1);
        else if (v == a + 1) v = (uint8_t)a;
    }
    return r;
}

Perm right_mul(const Perm& p, int a) {
    Perm r = p;
    std::swap(r[a], r[a + 1]);
    return r;
}

const Word& canonical_word(const Perm& p) {
    static std::map<Perm, Word> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    // lex-smallest reduced word: smallest left descent first, then recurse
    Word w;
    Perm cur = p;
    int n = (int)p.size();
    while (cur != identity_perm(n)) {
        for (int a = 0; a + 1 < n; ++a) {
            if (is_left_descent(cur, a)) {
                w.push_back((uint8_t)a);
                cur = left_mul(a, cur);
                break;
            }
        }
    }
    return cache.emplace(p, std::move(w)).first->second;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm longest_element(int n) {
    Perm p(n);
    for (int k = 0; k < n; ++k) p[k] = (uint8_t)(n - 1 - k);
    return p;
}

std::vector<WordMove> move_path(const Word& from, const Word& to) {
    if (from == to) return {};
    // BFS through the reduced-word graph of the common permutation.
    std::map<Word, std::pair<Word, WordMove>> parent;  // word -> (previous, move)
    std::queue<Word> q;
    q.push(from);
    parent[from] = {from, {WordMove::Commute, -1}};
    while (!q.empty()) {
        Word cur = q.front();
        q.pop();
        if (cur == to) break;
        auto visit = [&](Word nxt, WordMove mv) {
            if (parent.count(nxt)) return;
            parent[nxt] = {cur, mv};
            q.push(nxt);
        };
        for (int j = 0; j + 1 < (int)cur.size(); ++j) {
            int d = (int)cur[j] - (int)cur[j + 1];
            if (d >= 2 || d <= -2) {
                Word nxt = cur;
                std::swap(nxt[j], nxt[j + 1]);
                visit(std::move(nxt), {WordMove::Commute, j});
            }
        }
        for (int j = 0; j + 2 < (int)cur.size(); ++j) {
            if (cur[j] == cur[j + 2] && (cur[j + 1] == cur[j] + 1 || cur[j] == cur[j + 1] + 1)) {
                Word nxt = cur;
                nxt[j] = cur[j + 1];
                nxt[j + 1] = cur[j];
                nxt[j + 2] = cur[j + 1];
                visit(std::move(nxt), {WordMove::Braid, j});
            }
        }
    }
    if (!parent.count(to))
        throw std::logic_error("move_path: words are not reduced words of the same element");
    std::vector<WordMove> path;
    Word cur = to;
    while (cur != from) {
        auto& [prev, mv] = parent[cur];
        path.push_back(mv);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace qhs
