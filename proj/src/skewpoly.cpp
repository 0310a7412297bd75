#include "qhs/skewpoly.hpp"

#include <stdexcept>

namespace qhs {

int exp_total(Exps e, int n) {
    int t = 0;
    for (int k = 0; k < n; ++k) t += exp_at(e, k);
    return t;
}

int skew_mul_sign(const CartanDatum& d, const Nu& nu, Exps a, Exps b, int n) {
    // Moving each x_i of the left factor past each x_j (j < i) of the right
    // factor picks up (-1)^{p(nu_i)p(nu_j)} per crossing.
    int sgn = 0;
    for (int i = 1; i < n; ++i) {
        if (!d.odd(nu[i])) continue;
        int ai = exp_at(a, i);
        if (!ai) continue;
        for (int j = 0; j < i; ++j) {
            if (!d.odd(nu[j])) continue;
            sgn += ai * exp_at(b, j);
        }
    }
    return sgn & 1;
}

namespace {
void add_term(Poly& out, Exps e, Rat v) {
    if (v == 0) return;
    Rat& slot = out[e];
    slot += v;
    if (slot == 0) out.erase(e);
}
} // namespace

Poly poly_mul(const CartanDatum& d, const Nu& nu, const Poly& f, const Poly& g, int n) {
    Poly out;
    for (const auto& [ea, ca] : f)
        for (const auto& [eb, cb] : g) {
            Rat c = ca * cb;
            if (skew_mul_sign(d, nu, ea, eb, n)) c = -c;
            add_term(out, ea + eb, c);
        }
    return out;
}

Poly poly_mul_mono(const CartanDatum& d, const Nu& nu, Exps a, const Rat& c,
                   const Poly& f, int n) {
    Poly out;
    for (const auto& [eb, cb] : f) {
        Rat v = c * cb;
        if (skew_mul_sign(d, nu, a, eb, n)) v = -v;
        add_term(out, a + eb, v);
    }
    return out;
}

Poly oS(const CartanDatum& d, const Nu& nu, int k, const Poly& f, int n) {
    // oS_k(x^a e(nu)) = (-1)^{p(nu_k)p(nu_{k+1})(sum_j a_j p(nu_j) + a_k a_{k+1})}
    //                   x^{s_k a} e(s_k nu).
    Poly out;
    const int pk = d.p(nu[k]) * d.p(nu[k + 1]);
    for (const auto& [e, c] : f) {
        int sgn = 0;
        if (pk) {
            int tot = 0;
            for (int j = 0; j < n; ++j) tot += exp_at(e, j) * d.p(nu[j]);
            sgn = (tot + exp_at(e, k) * exp_at(e, k + 1)) & 1;
        }
        Exps e2 = exp_set(exp_set(e, k, exp_at(e, k + 1)), k + 1, exp_at(e, k));
        add_term(out, e2, sgn ? -c : c);
    }
    return out;
}

namespace {

// Generator value d_k(x_j) = (x_j)^{d_k} on a component with nu_k = nu_{k+1}.
Rat demazure_of_var(const CartanDatum& d, const Nu& nu, int k, int j) {
    if (j == k + 1) return Rat(1);
    if (j == k) return d.odd(nu[k]) ? Rat(1) : Rat(-1);
    return Rat(0);
}

// Leibniz expansion, peeling the first variable x_j off the monomial:
//   left:  d_k(x_j g)     = d_k(x_j) g + oS_k(x_j) d_k(g)
//   right: (x_j g)^{d_k}  = x_j g^{d_k} + (x_j)^{d_k} oS_k(g)
Poly demazure_mono(const CartanDatum& d, const Nu& nu, int k, Exps e,
                   bool right_side, int n) {
    Poly out;
    int j = -1;
    for (int p = 0; p < n; ++p)
        if (exp_at(e, p)) { j = p; break; }
    if (j < 0) return out;  // constants map to zero
    const Exps rest = exp_bump(e, j, -1);
    const Rat base = demazure_of_var(d, nu, k, j);

    if (right_side) {
        // x_j * (rest)^{d_k}
        Poly gr = demazure_mono(d, nu, k, rest, true, n);
        for (const auto& [er, cr] : gr) {
            Rat v = cr;
            if (skew_mul_sign(d, nu, exp_unit(j), er, n)) v = -v;
            add_term(out, exp_unit(j) + er, v);
        }
        if (base != 0) {
            Poly osr = oS(d, nu, k, Poly{{rest, Rat(1)}}, n);  // s_k nu == nu here
            for (const auto& [er, cr] : osr) add_term(out, er, base * cr);
        }
    } else {
        if (base != 0) add_term(out, rest, base);
        // oS_k(x_j) = sign * x_{s_k(j)}
        int sj = (j == k) ? k + 1 : (j == k + 1) ? k : j;
        int sgn = d.p(nu[k]) * d.p(nu[k + 1]) * d.p(nu[j]);
        Poly gr = demazure_mono(d, nu, k, rest, false, n);
        for (const auto& [er, cr] : gr) {
            Rat v = (sgn & 1) ? -cr : cr;
            if (skew_mul_sign(d, nu, exp_unit(sj), er, n)) v = -v;
            add_term(out, exp_unit(sj) + er, v);
        }
    }
    return out;
}

} // namespace

Poly demazure_left(const CartanDatum& d, const Nu& nu, int k, const Poly& f, int n) {
    Poly out;
    if (nu[k] != nu[k + 1]) return out;
    for (const auto& [e, c] : f) {
        Poly part = demazure_mono(d, nu, k, e, false, n);
        for (const auto& [e2, c2] : part) add_term(out, e2, c * c2);
    }
    return out;
}

Poly demazure_right(const CartanDatum& d, const Nu& nu, int k, const Poly& f, int n) {
    Poly out;
    if (nu[k] != nu[k + 1]) return out;
    for (const auto& [e, c] : f) {
        Poly part = demazure_mono(d, nu, k, e, true, n);
        for (const auto& [e2, c2] : part) add_term(out, e2, c * c2);
    }
    return out;
}

DemazureResult demazure(const CartanDatum& d, const SkewPoly& f, int k, bool right_side) {
    const int n = f.n();
    if (k < 0 || k + 1 >= n) throw std::invalid_argument("demazure: invalid crossing index");
    DemazureResult r;
    r.partial.nu = f.nu;
    r.partial.terms = right_side ? demazure_right(d, f.nu, k, f.terms, n)
                                 : demazure_left(d, f.nu, k, f.terms, n);
    r.twisted.nu = f.nu;
    std::swap(r.twisted.nu[k], r.twisted.nu[k + 1]);
    r.twisted.terms = oS(d, f.nu, k, f.terms, n);
    return r;
}

} // namespace qhs
