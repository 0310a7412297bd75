#include "qhs/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qhs {

uint32_t pack_perm(const Perm& p) {
    uint32_t v = 0;
    for (size_t k = 0; k < p.size(); ++k) v |= uint32_t(p[k]) << (4 * k);
    return v;
}

Perm unpack_perm(uint32_t w, int n) {
    Perm p(n);
    for (int k = 0; k < n; ++k) p[k] = uint8_t((w >> (4 * k)) & 0xF);
    return p;
}

uint32_t pack_nu(const Nu& nu) {
    uint32_t v = 0;
    for (size_t k = 0; k < nu.size(); ++k) v |= uint32_t(nu[k]) << (4 * k);
    return v;
}

Nu unpack_nu(uint32_t nu, int n) {
    Nu s(n);
    for (int k = 0; k < n; ++k) s[k] = uint8_t((nu >> (4 * k)) & 0xF);
    return s;
}

Elem& elem_add(Elem& a, const PBWMono& m, const Rat& c) {
    if (c == 0) return a;
    Rat& slot = a[m];
    slot += c;
    if (slot == 0) a.erase(m);
    return a;
}

Elem& elem_axpy(Elem& a, const Elem& b, const Rat& c) {
    if (c == 0) return a;
    for (const auto& [m, v] : b) elem_add(a, m, v * c);
    return a;
}

Elem elem_scale(const Elem& a, const Rat& c) {
    Elem r;
    if (c == 0) return r;
    for (const auto& [m, v] : a) r.emplace(m, v * c);
    return r;
}

bool elem_is_zero(const Elem& a) { return a.empty(); }

std::vector<Nu> sequences_with_content(const CartanDatum& d, const RootVec& beta) {
    std::vector<Nu> out;
    Nu cur;
    int n = height(beta);
    RootVec rem = beta;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < d.rank; ++i) {
            if (rem[i] == 0) continue;
            --rem[i];
            cur.push_back((uint8_t)i);
            rec();
            cur.pop_back();
            ++rem[i];
        }
    };
    rec();
    return out;
}

Rn::Rn(CartanDatum d, QParams qp, int n) : d_(std::move(d)), qp_(std::move(qp)), n_(n) {
    if (n < 0 || n > 7) throw std::invalid_argument("Rn: 0 <= n <= 7 required");
    d_.validate();
}

std::vector<Nu> Rn::all_components() const {
    std::vector<Nu> out;
    Nu cur(n_, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n_) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < d_.rank; ++i) {
            cur[pos] = (uint8_t)i;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Nu> Rn::components(const RootVec& beta) const {
    return sequences_with_content(d_, beta);
}

Elem Rn::one() const { return unit_on(all_components()); }

Elem Rn::unit_on(const std::vector<Nu>& comps) const {
    Elem r;
    Perm id = identity_perm(n_);
    for (const auto& nu : comps) r[{0, pack_perm(id), pack_nu(nu)}] = 1;
    return r;
}

Elem Rn::e(const Nu& nu) const {
    Elem r;
    r[{0, pack_perm(identity_perm(n_)), pack_nu(nu)}] = 1;
    return r;
}

Elem Rn::x(int k) const {
    Elem r;
    Perm id = identity_perm(n_);
    for (const auto& nu : all_components())
        r[{exp_unit(k), pack_perm(id), pack_nu(nu)}] = 1;
    return r;
}

Elem Rn::tau(int a) const {
    Elem r;
    Perm s = transposition(a, n_);
    for (const auto& nu : all_components()) r[{0, pack_perm(s), pack_nu(nu)}] = 1;
    return r;
}

// ---------------------------------------------------------------------------
// Rewriting engine
// ---------------------------------------------------------------------------

Poly Rn::q_poly(int i, int j, int a) const {
    // Q_{i,j}(x_a, x_{a+1}); zero when i == j.
    Poly out;
    if (i == j) return out;
    for (const auto& t : qp_.terms(i, j)) {
        Exps e = 0;
        e = exp_set(e, a, t.r);
        e = exp_set(e, a + 1, t.s);
        // Exponent reordering is trivial here: x_a^r x_{a+1}^s is already in
        // canonical order.
        Rat& slot = out[e];
        slot += t.coeff;
        if (slot == 0) out.erase(e);
    }
    return out;
}

Poly Rn::r8_correction(int a, const Nu& mu) const {
    Poly out;
    int i = mu[a], j = mu[a + 1];
    if (mu[a + 2] != i) return out;  // zero unless nu_a = nu_{a+2}
    if (!d_.odd(i)) {
        // sum_t t * (x_{a+2}^r - x_a^r)/(x_{a+2} - x_a) * x_{a+1}^s
        for (const auto& t : qp_.terms(i, j)) {
            for (int m = 0; m + 1 <= t.r; ++m) {
                Exps e = 0;
                e = exp_set(e, a, m);
                e = exp_set(e, a + 2, t.r - 1 - m);
                Poly quot{{e, t.coeff}};
                Poly zs{{exp_set(Exps(0), a + 1, t.s), Rat(1)}};
                for (const auto& [e2, c2] : poly_mul(d_, mu, quot, zs, n_)) {
                    Rat& slot = out[e2];
                    slot += c2;
                    if (slot == 0) out.erase(e2);
                }
            }
        }
        return out;
    }
    // odd case: (-1)^{p(j)} (x_{a+2}-x_a) (x_{a+2}^r - x_a^r)/(x_{a+2}^2-x_a^2) x_{a+1}^s
    Poly acc;
    for (const auto& t : qp_.terms(i, j)) {
        if (t.r % 2 != 0) continue;  // forced zero by the oddness constraint
        for (int m = 0; 2 * m + 2 <= t.r; ++m) {
            Exps e = 0;
            e = exp_set(e, a, 2 * m);
            e = exp_set(e, a + 2, t.r - 2 - 2 * m);
            Poly quot{{e, t.coeff}};
            Poly zs{{exp_set(Exps(0), a + 1, t.s), Rat(1)}};
            for (const auto& [e2, c2] : poly_mul(d_, mu, quot, zs, n_)) {
                Rat& slot = acc[e2];
                slot += c2;
                if (slot == 0) acc.erase(e2);
            }
        }
    }
    if (acc.empty()) return acc;
    Poly lead;
    lead[exp_unit(a + 2)] = 1;
    lead[exp_unit(a)] = -1;
    out = poly_mul(d_, mu, lead, acc, n_);
    if (d_.p(mu[a + 1])) {
        for (auto& [e, c] : out) c = -c;
    }
    return out;
}

std::vector<Rn::PushPart> Rn::push_left(const Word& word, const Poly& f, const Nu& nu) const {
    std::vector<PushPart> out;
    if (f.empty()) return out;
    if (word.empty()) {
        out.push_back({f, {}});
        return out;
    }
    Word pre(word.begin(), word.end() - 1);
    int t = word.back();
    // tau_t f e(nu) = (oS_t f) tau_t e(nu) + (d_t f) e(nu)
    Nu snu = nu;
    std::swap(snu[t], snu[t + 1]);
    Poly f1 = oS(d_, nu, t, f, n_);
    for (auto& part : push_left(pre, f1, snu)) {
        part.w.push_back((uint8_t)t);
        out.push_back(std::move(part));
    }
    Poly f2 = demazure_left(d_, nu, t, f, n_);
    if (!f2.empty()) {
        for (auto& part : push_left(pre, f2, nu)) out.push_back(std::move(part));
    }
    return out;
}

Elem Rn::leftmul_poly(const Poly& g, const Nu& comp, const Elem& z) const {
    Elem out;
    for (const auto& [m, c] : z) {
        for (const auto& [ge, gc] : g) {
            Rat v = gc * c;
            if (skew_mul_sign(d_, comp, ge, m.ex, n_)) v = -v;
            elem_add(out, {ge + m.ex, m.w, m.nu}, v);
        }
    }
    return out;
}

Elem Rn::normalize_parts(const std::vector<PushPart>& parts, const Nu& nu) const {
    Elem out;
    for (const auto& part : parts) {
        Perm wp = perm_of_word(part.w, n_);
        Nu comp = act(wp, nu);
        if (part.w == canonical_word(wp)) {
            uint32_t wpk = pack_perm(wp), nuk = pack_nu(nu);
            for (const auto& [ge, gc] : part.g) elem_add(out, {ge, wpk, nuk}, gc);
        } else {
            Elem z = word_nf(part.w, nu);
            elem_axpy(out, leftmul_poly(part.g, comp, z), Rat(1));
        }
    }
    return out;
}

Elem Rn::word_nf(const Word& word, const Nu& nu) const {
    auto key = std::make_pair(word, pack_nu(nu));
    auto it = word_memo_.find(key);
    if (it != word_memo_.end()) return it->second;

    Elem z;
    Perm sigma = perm_of_word(word, n_);
    z[{0, pack_perm(identity_perm(n_)), pack_nu(act(sigma, nu))}] = 1;
    for (uint8_t a : word) z = mul_tau(z, a);
    return word_memo_.emplace(std::move(key), std::move(z)).first->second;
}

Elem Rn::leftmul_word(const Word& pre, const Elem& z) const {
    Elem out;
    for (const auto& [m, c] : z) {
        Nu nu = unpack_nu(m.nu, n_);
        Perm u = unpack_perm(m.w, n_);
        Nu mu = act(u, nu);
        auto parts = push_left(pre, Poly{{m.ex, c}}, mu);
        for (const auto& part : parts) {
            Word concat = part.w;
            const Word& cu = canonical_word(u);
            concat.insert(concat.end(), cu.begin(), cu.end());
            Elem base = word_nf(concat, nu);
            Nu comp = act(perm_of_word(concat, n_), nu);
            elem_axpy(out, leftmul_poly(part.g, comp, base), Rat(1));
        }
    }
    return out;
}

Elem Rn::reduced_to_canonical(const Word& word, const Nu& nu) const {
    auto key = std::make_pair(word, pack_nu(nu));
    auto it = r2c_memo_.find(key);
    if (it != r2c_memo_.end()) return it->second;

    Perm w = perm_of_word(word, n_);
    const Word& cw = canonical_word(w);
    Elem result;
    if (word == cw) {
        result[{0, pack_perm(w), pack_nu(nu)}] = 1;
        return r2c_memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    auto path = move_path(word, cw);
    Word cur = word;
    int sign = 1;
    Elem corrections;
    for (const auto& mv : path) {
        int j = mv.pos;
        if (mv.kind == WordMove::Commute) {
            Word suffix(cur.begin() + j + 2, cur.end());
            Nu mu = act(perm_of_word(suffix, n_), nu);
            int a = cur[j], b = cur[j + 1];
            int s = d_.p(mu[a]) * d_.p(mu[a + 1]) * d_.p(mu[b]) * d_.p(mu[b + 1]);
            if (s & 1) sign = -sign;
            std::swap(cur[j], cur[j + 1]);
        } else {
            Word suffix(cur.begin() + j + 3, cur.end());
            Nu mu = act(perm_of_word(suffix, n_), nu);
            int a = std::min<int>(cur[j], cur[j + 1]);
            // tau_{a+1} tau_a tau_{a+1} = tau_a tau_{a+1} tau_a + C on e(mu)
            int dir = (cur[j] == a + 1) ? +1 : -1;
            Poly C = r8_correction(a, mu);
            if (!C.empty()) {
                Word prefix(cur.begin(), cur.begin() + j);
                Elem z = word_nf(suffix, nu);
                Elem zc = leftmul_poly(C, mu, z);
                Elem corr = leftmul_word(prefix, zc);
                elem_axpy(corrections, corr, Rat(sign * dir));
            }
            uint8_t c0 = cur[j], c1 = cur[j + 1];
            cur[j] = c1;
            cur[j + 1] = c0;
            cur[j + 2] = c1;
        }
    }
    result = std::move(corrections);
    elem_add(result, {0, pack_perm(w), pack_nu(nu)}, Rat(sign));
    return r2c_memo_.emplace(std::move(key), std::move(result)).first->second;
}

Elem Rn::tau_tau_nf(const Perm& w, int t, const Nu& nu) const {
    // NF of tau_w tau_t e(nu)
    auto key = std::make_pair(std::make_pair(pack_perm(w), t), pack_nu(nu));
    auto it = tau_tau_memo_.find(key);
    if (it != tau_tau_memo_.end()) return it->second;

    Elem result;
    const Word& cw = canonical_word(w);
    Perm wst = right_mul(w, t);
    if (coxeter_length(wst) > coxeter_length(w)) {
        Word ext = cw;
        ext.push_back((uint8_t)t);
        result = reduced_to_canonical(ext, nu);
    } else {
        // w = u s_t with l(u) = l(w) - 1.  Rewrite tau_w through the reduced
        // word canon(u)+[t], then contract tau_t^2 via (R6).
        Perm u = wst;
        Word r = canonical_word(u);
        r.push_back((uint8_t)t);
        Nu snu = nu;
        std::swap(snu[t], snu[t + 1]);
        Elem E = reduced_to_canonical(r, snu);
        // E = eps * tau_w e(snu) + lower terms
        PBWMono main{0, pack_perm(w), pack_nu(snu)};
        auto mit = E.find(main);
        if (mit == E.end()) throw std::logic_error("tau_tau_nf: missing leading term");
        Rat eps = mit->second;
        Elem low = E;
        low.erase(main);
        // tau_r tau_t e(nu) = tau_{canon(u)} Q_{nu_t, nu_{t+1}}(x_t, x_{t+1}) e(nu)
        Poly q = q_poly(nu[t], nu[t + 1], t);
        Elem head;
        if (!q.empty()) head = normalize_parts(push_left(canonical_word(u), q, nu), nu);
        Elem low_t = mul_tau(low, t);
        // tau_w tau_t e(nu) = eps^{-1} (head - low_t)
        Rat inv = Rat(1) / eps;
        result = elem_scale(head, inv);
        elem_axpy(result, low_t, -inv);
    }
    return tau_tau_memo_.emplace(std::move(key), std::move(result)).first->second;
}

Elem Rn::tau_x_nf(const Perm& w, int k, const Nu& nu) const {
    auto key = std::make_pair(std::make_pair(pack_perm(w), k), pack_nu(nu));
    auto it = tau_x_memo_.find(key);
    if (it != tau_x_memo_.end()) return it->second;
    Poly f{{exp_unit(k), Rat(1)}};
    Elem result = normalize_parts(push_left(canonical_word(w), f, nu), nu);
    return tau_x_memo_.emplace(std::move(key), std::move(result)).first->second;
}

Elem Rn::mul_tau(const Elem& a, int t) const {
    Elem out;
    for (const auto& [m, c] : a) {
        Nu nu = unpack_nu(m.nu, n_);
        Nu snu = nu;
        std::swap(snu[t], snu[t + 1]);
        Elem base = tau_tau_nf(unpack_perm(m.w, n_), t, snu);
        if (m.ex == 0) {
            elem_axpy(out, base, c);
        } else {
            Perm w = unpack_perm(m.w, n_);
            Nu comp = act(w, nu);
            elem_axpy(out, leftmul_poly(Poly{{m.ex, Rat(1)}}, comp, base), c);
        }
    }
    return out;
}

Elem Rn::mul_x(const Elem& a, int k) const {
    Elem out;
    for (const auto& [m, c] : a) {
        Nu nu = unpack_nu(m.nu, n_);
        Perm w = unpack_perm(m.w, n_);
        Elem base = tau_x_nf(w, k, nu);
        if (m.ex == 0) {
            elem_axpy(out, base, c);
        } else {
            Nu comp = act(w, nu);
            elem_axpy(out, leftmul_poly(Poly{{m.ex, Rat(1)}}, comp, base), c);
        }
    }
    return out;
}

Elem Rn::mul_e(const Elem& a, const Nu& nu) const {
    Elem out;
    uint32_t key = pack_nu(nu);
    for (const auto& [m, c] : a)
        if (m.nu == key) out.emplace(m, c);
    return out;
}

Elem Rn::mul_token(const Elem& a, const Token& t) const {
    switch (t.kind) {
        case Token::E: return mul_e(a, t.nu);
        case Token::X: {
            if (t.idx < 0 || t.idx >= n_) throw std::out_of_range("x index out of range");
            return mul_x(a, t.idx);
        }
        case Token::T: {
            if (t.idx < 0 || t.idx + 1 >= n_) throw std::out_of_range("tau index out of range");
            return mul_tau(a, t.idx);
        }
    }
    return {};
}

Elem Rn::mul_token_left(const Token& t, const Elem& a) const {
    switch (t.kind) {
        case Token::E: {
            Elem out;
            uint32_t key = pack_nu(t.nu);
            for (const auto& [m, c] : a) {
                Perm w = unpack_perm(m.w, n_);
                if (pack_nu(act(w, unpack_nu(m.nu, n_))) == key) out.emplace(m, c);
            }
            return out;
        }
        case Token::X: {
            Elem out;
            for (const auto& [m, c] : a) {
                Nu nu = unpack_nu(m.nu, n_);
                Nu comp = act(unpack_perm(m.w, n_), nu);
                elem_axpy(out, leftmul_poly(Poly{{exp_unit(t.idx), Rat(1)}}, comp, Elem{{m, c}}),
                          Rat(1));
            }
            return out;
        }
        case Token::T: {
            Elem out;
            Word pre{(uint8_t)t.idx};
            for (const auto& [m, c] : a)
                elem_axpy(out, leftmul_word(pre, Elem{{m, c}}), Rat(1));
            return out;
        }
    }
    return {};
}

Elem Rn::nf(const std::vector<Token>& word) const {
    Elem z = one();
    for (const auto& t : word) z = mul_token(z, t);
    return z;
}

Elem Rn::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [mb, cb] : b) {
        Nu nu = unpack_nu(mb.nu, n_);
        Perm u = unpack_perm(mb.w, n_);
        Nu mu = act(u, nu);
        // filter a by right idempotent mu
        Elem z;
        uint32_t muk = pack_nu(mu);
        for (const auto& [ma, ca] : a)
            if (ma.nu == muk) z.emplace(ma, ca);
        if (z.empty()) continue;
        // multiply by x^{ex} variable by variable (ascending order is the
        // canonical form of the monomial), then the crossings of u
        for (int k = 0; k < n_; ++k)
            for (int rep = 0; rep < exp_at(mb.ex, k); ++rep) z = mul_x(z, k);
        for (uint8_t t : canonical_word(u)) z = mul_tau(z, t);
        elem_axpy(out, z, cb);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grading and display
// ---------------------------------------------------------------------------

DegPar Rn::tau_degpar(const Perm& w, const Nu& nu) const {
    const Word& cw = canonical_word(w);
    DegPar dp;
    Nu cur = nu;
    for (auto it = cw.rbegin(); it != cw.rend(); ++it) {
        int a = *it;
        dp.deg -= d_.sym(cur[a], cur[a + 1]);
        dp.par += d_.p(cur[a]) * d_.p(cur[a + 1]);
        std::swap(cur[a], cur[a + 1]);
    }
    dp.par &= 1;
    return dp;
}

DegPar Rn::mono_degpar(const PBWMono& m) const {
    Nu nu = unpack_nu(m.nu, n_);
    Perm w = unpack_perm(m.w, n_);
    DegPar dp = tau_degpar(w, nu);
    Nu mu = act(w, nu);
    for (int k = 0; k < n_; ++k) {
        int ek = exp_at(m.ex, k);
        dp.deg += ek * d_.sym(mu[k], mu[k]);
        dp.par += ek * d_.p(mu[k]);
    }
    dp.par &= 1;
    return dp;
}

std::optional<DegPar> Rn::degree_of(const Elem& a) const {
    if (a.empty()) return DegPar{0, 0};
    std::optional<DegPar> dp;
    for (const auto& [m, c] : a) {
        DegPar cur = mono_degpar(m);
        if (!dp) dp = cur;
        else if (!(*dp == cur)) return std::nullopt;
    }
    return dp;
}

// ---------------------------------------------------------------------------
// Intertwiners, involutions
// ---------------------------------------------------------------------------

Elem Rn::intertwiner_phi(int a) const {
    if (a < 0 || a + 1 >= n_) throw std::out_of_range("intertwiner: invalid index");
    Elem out;
    uint32_t sa = pack_perm(transposition(a, n_));
    uint32_t id = pack_perm(identity_perm(n_));
    for (const auto& nu : all_components()) {
        uint32_t nuk = pack_nu(nu);
        if (nu[a] != nu[a + 1]) {
            elem_add(out, {0, sa, nuk}, Rat(1));
        } else if (!d_.odd(nu[a])) {
            // (1 - (x_{a+1} - x_a) tau_a) e(nu)
            elem_add(out, {0, id, nuk}, Rat(1));
            elem_add(out, {exp_unit(a + 1), sa, nuk}, Rat(-1));
            elem_add(out, {exp_unit(a), sa, nuk}, Rat(1));
        } else {
            // ((x_{a+1} - x_a) - (x_{a+1}^2 - x_a^2) tau_a) e(nu)
            elem_add(out, {exp_unit(a + 1), id, nuk}, Rat(1));
            elem_add(out, {exp_unit(a), id, nuk}, Rat(-1));
            elem_add(out, {exp_set(Exps(0), a + 1, 2), sa, nuk}, Rat(-1));
            elem_add(out, {exp_set(Exps(0), a, 2), sa, nuk}, Rat(1));
        }
    }
    return out;
}

Elem Rn::intertwiner_g(int a) const {
    if (a < 0 || a + 1 >= n_) throw std::out_of_range("intertwiner: invalid index");
    Elem out;
    uint32_t sa = pack_perm(transposition(a, n_));
    uint32_t id = pack_perm(identity_perm(n_));
    for (const auto& nu : all_components()) {
        uint32_t nuk = pack_nu(nu);
        if (nu[a] != nu[a + 1]) {
            elem_add(out, {0, sa, nuk}, Rat(1));
            continue;
        }
        Poly diff{{exp_unit(a + 1), Rat(1)}, {exp_unit(a), Rat(-1)}};
        Poly diff2{{exp_set(Exps(0), a + 1, 2), Rat(1)}, {exp_set(Exps(0), a, 2), Rat(-1)}};
        if (!d_.odd(nu[a])) {
            // (x_{a+1}-x_a)(1 - (x_{a+1}-x_a) tau_a) e(nu)
            for (const auto& [e2, c2] : diff) elem_add(out, {e2, id, nuk}, c2);
            Poly sq = poly_mul(d_, nu, diff, diff, n_);
            for (const auto& [e2, c2] : sq) elem_add(out, {e2, sa, nuk}, -c2);
        } else {
            // (x_{a+1}^2-x_a^2)((x_{a+1}-x_a) - (x_{a+1}^2-x_a^2) tau_a) e(nu)
            Poly cubic = poly_mul(d_, nu, diff2, diff, n_);
            for (const auto& [e2, c2] : cubic) elem_add(out, {e2, id, nuk}, c2);
            Poly quartic = poly_mul(d_, nu, diff2, diff2, n_);
            for (const auto& [e2, c2] : quartic) elem_add(out, {e2, sa, nuk}, -c2);
        }
    }
    return out;
}

Elem Rn::psi(const Elem& a) const {
    Elem out;
    for (const auto& [m, c] : a) {
        Nu nu = unpack_nu(m.nu, n_);
        Perm w = unpack_perm(m.w, n_);
        Nu mu = act(w, nu);
        // psi(x^ex tau_w e(nu)) = e(nu) tau_{reverse} x^{ex reversed}
        Elem z = e(nu);
        const Word& cw = canonical_word(w);
        for (auto it = cw.rbegin(); it != cw.rend(); ++it) z = mul_tau(z, *it);
        for (int k = n_ - 1; k >= 0; --k)
            for (int rep = 0; rep < exp_at(m.ex, k); ++rep) z = mul_x(z, k);
        elem_axpy(out, z, c);
    }
    return out;
}

Elem Rn::parity_twist(const Elem& a) const {
    Elem out;
    for (const auto& [m, c] : a) {
        if (mono_degpar(m).par) out.emplace(m, -c);
        else out.emplace(m, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// PBW enumeration
// ---------------------------------------------------------------------------

std::vector<PBWMono> Rn::pbw_basis_of_degree(const std::vector<Nu>& comps, int deg) const {
    std::vector<PBWMono> out;
    for (const auto& nu : comps) {
        uint32_t nuk = pack_nu(nu);
        for (const auto& w : all_perms(n_)) {
            DegPar base = tau_degpar(w, nu);
            int rem = deg - base.deg;
            if (rem < 0) continue;
            Nu mu = act(w, nu);
            uint32_t wk = pack_perm(w);
            // enumerate exponent vectors with sum_k ex_k (alpha|alpha)_k = rem
            std::function<void(int, int, Exps)> rec = [&](int k, int left, Exps ex) {
                if (k == n_) {
                    if (left == 0) out.push_back({ex, wk, nuk});
                    return;
                }
                int step = d_.sym(mu[k], mu[k]);
                for (int v = 0; v * step <= left; ++v)
                    rec(k + 1, left - v * step, exp_set(ex, k, v));
            };
            rec(0, rem, 0);
        }
    }
    return out;
}

SuperScalar Rn::graded_dim_series(const Nu& nu, const Nu& mu, int max_deg) const {
    if (nu.size() != (size_t)n_ || mu.size() != (size_t)n_)
        throw std::invalid_argument("graded_dim_series: wrong component length");
    SuperScalar out;
    for (const auto& w : all_perms(n_)) {
        if (act(w, mu) != nu) continue;
        DegPar base = tau_degpar(w, mu);
        std::function<void(int, int, int)> rec = [&](int k, int deg, int par) {
            if (deg > max_deg) return;
            if (k == n_) {
                out += SuperScalar::monomial(deg, par & 1);
                return;
            }
            int step = d_.sym(nu[k], nu[k]);
            for (int v = 0;; ++v) {
                int dd = deg + v * step;
                if (dd > max_deg) break;
                rec(k + 1, dd, par + v * d_.p(nu[k]));
            }
        };
        rec(0, base.deg, base.par);
    }
    return out;
}

bool Rn::mono_less(const PBWMono& a, const PBWMono& b) const {
    DegPar da = mono_degpar(a), db = mono_degpar(b);
    if (da.deg != db.deg) return da.deg < db.deg;
    if (da.par != db.par) return da.par < db.par;
    if (a.nu != b.nu) return a.nu < b.nu;
    if (a.w != b.w) {
        const Word& wa = canonical_word(unpack_perm(a.w, n_));
        const Word& wb = canonical_word(unpack_perm(b.w, n_));
        return wa != wb ? wa < wb : a.w < b.w;
    }
    return a.ex < b.ex;
}

std::string Rn::mono_str(const PBWMono& m) const {
    std::ostringstream os;
    Nu nu = unpack_nu(m.nu, n_);
    Perm w = unpack_perm(m.w, n_);
    Nu mu = act(w, nu);
    for (int k = 0; k < n_; ++k) {
        int ek = exp_at(m.ex, k);
        if (ek == 1) os << "x" << k + 1 << " ";
        else if (ek > 1) os << "x" << k + 1 << "^" << ek << " ";
    }
    (void)mu;
    for (uint8_t a : canonical_word(w)) os << "t" << int(a) + 1 << " ";
    os << "e(";
    for (size_t k = 0; k < nu.size(); ++k) {
        if (k) os << ",";
        os << int(nu[k]) + 1;
    }
    os << ")";
    return os.str();
}

std::string Rn::elem_str(const Elem& a) const {
    if (a.empty()) return "0";
    std::vector<const PBWMono*> order;
    for (const auto& [m, c] : a) order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [&](const PBWMono* x, const PBWMono* y) { return mono_less(*x, *y); });
    std::ostringstream os;
    bool first = true;
    for (const PBWMono* m : order) {
        const Rat& c = a.at(*m);
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.str() << "*";
        os << mono_str(*m);
    }
    return os.str();
}

} // namespace qhs
