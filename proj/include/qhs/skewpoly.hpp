#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qhs/cartan.hpp"
#include "qhs/rational.hpp"

namespace qhs {

// Index sequences nu in I^n.
using Nu = std::vector<uint8_t>;

// Exponent vectors packed 8 bits per position (n <= 8, exponents < 256).
using Exps = uint64_t;
inline int exp_at(Exps e, int k) { return int((e >> (8 * k)) & 0xFF); }
inline Exps exp_set(Exps e, int k, int v) {
    return (e & ~(Exps(0xFF) << (8 * k))) | (Exps(uint8_t(v)) << (8 * k));
}
inline Exps exp_bump(Exps e, int k, int dv) { return exp_set(e, k, exp_at(e, k) + dv); }
inline Exps exp_unit(int k) { return Exps(1) << (8 * k); }
int exp_total(Exps e, int n);

// A polynomial in the skew ring P_nu, always attached to a component nu:
// the variables x_a, x_b skew-commute with the sign (-1)^{p(nu_a)p(nu_b)}.
using Poly = std::map<Exps, Rat>;

// Sign exponent for reordering x^a * x^b into the canonical x_1 <= ... order.
int skew_mul_sign(const CartanDatum& d, const Nu& nu, Exps a, Exps b, int n);
Poly poly_mul(const CartanDatum& d, const Nu& nu, const Poly& f, const Poly& g, int n);
// x^a * f with x^a on the left.
Poly poly_mul_mono(const CartanDatum& d, const Nu& nu, Exps a, const Rat& c,
                   const Poly& f, int n);

// The twisted swap oS_k: P_nu e(nu) -> P_{s_k nu} e(s_k nu).
// Returns the transformed polynomial; the caller tracks the new component.
Poly oS(const CartanDatum& d, const Nu& nu, int k, const Poly& f, int n);

// Demazure operators.  Both vanish on components with nu_k != nu_{k+1};
// otherwise they are computed from the generator values via the Leibniz
// rules, which avoids division in the skew ring.
Poly demazure_left(const CartanDatum& d, const Nu& nu, int k, const Poly& f, int n);
Poly demazure_right(const CartanDatum& d, const Nu& nu, int k, const Poly& f, int n);

// Public wrapper used by the CLI and the tests: a skew polynomial that
// remembers its component.
struct SkewPoly {
    Nu nu;
    Poly terms;
    int n() const { return (int)nu.size(); }
};

struct DemazureResult {
    SkewPoly partial;   // d_k f  (or f^{d_k} for side = right)
    SkewPoly twisted;   // oS_k f, on component s_k nu
};
DemazureResult demazure(const CartanDatum& d, const SkewPoly& f, int k, bool right_side);

} // namespace qhs
