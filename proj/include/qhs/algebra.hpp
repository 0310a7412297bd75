#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhs/cartan.hpp"
#include "qhs/laurent.hpp"
#include "qhs/perm.hpp"
#include "qhs/qparams.hpp"
#include "qhs/skewpoly.hpp"

namespace qhs {

// PBW basis monomial x^ex tau_w e(nu).  The exponents are attached to the
// left idempotent w.nu; nu is the right idempotent.  Permutations and
// components are packed 4 bits per strand (n <= 8, rank <= 16).
struct PBWMono {
    Exps ex = 0;
    uint32_t w = 0;
    uint32_t nu = 0;
    auto operator<=>(const PBWMono&) const = default;
};

uint32_t pack_perm(const Perm& p);
Perm unpack_perm(uint32_t w, int n);
uint32_t pack_nu(const Nu& nu);
Nu unpack_nu(uint32_t nu, int n);

// Exact linear combination of PBW monomials.
using Elem = std::map<PBWMono, Rat>;

Elem& elem_add(Elem& a, const PBWMono& m, const Rat& c);
Elem& elem_axpy(Elem& a, const Elem& b, const Rat& c);
Elem elem_scale(const Elem& a, const Rat& c);
bool elem_is_zero(const Elem& a);

// Generator tokens for words in R(n).
struct Token {
    enum Kind { E, X, T } kind;
    int idx = 0;  // 0-based strand/crossing index; unused for E
    Nu nu;        // only for E
    static Token e(Nu v) { return {E, 0, std::move(v)}; }
    static Token x(int k) { return {X, k, {}}; }
    static Token t(int a) { return {T, a, {}}; }
};

struct DegPar {
    int deg = 0;
    int par = 0;  // Z_2 parity
    bool operator==(const DegPar&) const = default;
};

// The rewriting context for R(n) over a fixed Cartan datum and Q-matrix.
// All public operations return elements in PBW normal form.
class Rn {
public:
    Rn(CartanDatum d, QParams qp, int n);

    int strands() const { return n_; }
    const CartanDatum& datum() const { return d_; }
    const QParams& qparams() const { return qp_; }

    // --- elements -------------------------------------------------------
    Elem one() const;                       // sum of all e(nu)
    Elem unit_on(const std::vector<Nu>& comps) const;
    Elem e(const Nu& nu) const;
    Elem x(int k) const;                    // sum over nu of x_k e(nu)
    Elem tau(int a) const;
    Elem nf(const std::vector<Token>& word) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_token(const Elem& a, const Token& t) const;     // right mult
    Elem mul_token_left(const Token& t, const Elem& a) const;

    // --- grading ---------------------------------------------------------
    DegPar mono_degpar(const PBWMono& m) const;
    // (degree, parity) of a homogeneous element; nullopt for inhomogeneous;
    // the zero element reports (0,0).
    std::optional<DegPar> degree_of(const Elem& a) const;

    // --- structure -------------------------------------------------------
    Elem intertwiner_phi(int a) const;      // the intertwiner phi_a
    Elem intertwiner_g(int a) const;        // its variant g_a
    Elem psi(const Elem& a) const;          // anti-involution fixing generators
    Elem parity_twist(const Elem& a) const; // parity involution phi_A

    // All components nu in I^beta (content = beta) or I^n.
    std::vector<Nu> components(const RootVec& beta) const;
    std::vector<Nu> all_components() const;

    // PBW monomials of exact degree deg with right idempotent in comps.
    std::vector<PBWMono> pbw_basis_of_degree(const std::vector<Nu>& comps, int deg) const;
    // Graded dimensions of e(nu) R(beta) e(mu) up to max_deg (PBW counting;
    // no rewriting involved).
    SuperScalar graded_dim_series(const Nu& nu, const Nu& mu, int max_deg) const;

    // Canonical order for reports.
    bool mono_less(const PBWMono& a, const PBWMono& b) const;
    std::string mono_str(const PBWMono& m) const;
    std::string elem_str(const Elem& a) const;

    // Degree of tau_w e(nu) alone (exponents zero).
    DegPar tau_degpar(const Perm& w, const Nu& nu) const;

private:
    CartanDatum d_;
    QParams qp_;
    int n_;

    // Q_{nu_a, nu_{a+1}}(x_a, x_{a+1}) as a packed polynomial.
    Poly q_poly(int i, int j, int a) const;
    // (R8) correction: tau_{a+1} tau_a tau_{a+1} - tau_a tau_{a+1} tau_a on e(mu).
    Poly r8_correction(int a, const Nu& mu) const;

    // tau_word . f . e(nu) pushed into sum of g tau_{w'} e(nu).
    struct PushPart {
        Poly g;
        Word w;
    };
    std::vector<PushPart> push_left(const Word& word, const Poly& f, const Nu& nu) const;

    Elem word_nf(const Word& word, const Nu& nu) const;
    Elem reduced_to_canonical(const Word& word, const Nu& nu) const;
    Elem tau_tau_nf(const Perm& w, int t, const Nu& nu) const;  // NF(tau_w tau_t e(nu))
    Elem tau_x_nf(const Perm& w, int k, const Nu& nu) const;    // NF(tau_w e(nu) x_k)

    Elem mul_x(const Elem& a, int k) const;
    Elem mul_tau(const Elem& a, int t) const;
    Elem mul_e(const Elem& a, const Nu& nu) const;

    Elem leftmul_poly(const Poly& g, const Nu& comp, const Elem& z) const;
    Elem leftmul_word(const Word& pre, const Elem& z) const;
    Elem normalize_parts(const std::vector<PushPart>& parts, const Nu& nu) const;

    mutable std::map<std::pair<std::pair<uint32_t, int>, uint32_t>, Elem> tau_tau_memo_;
    mutable std::map<std::pair<std::pair<uint32_t, int>, uint32_t>, Elem> tau_x_memo_;
    mutable std::map<std::pair<Word, uint32_t>, Elem> word_memo_;
    mutable std::map<std::pair<Word, uint32_t>, Elem> r2c_memo_;
};

using RnPtr = std::shared_ptr<Rn>;

// I^beta as raw sequences.
std::vector<Nu> sequences_with_content(const CartanDatum& d, const RootVec& beta);

} // namespace qhs
