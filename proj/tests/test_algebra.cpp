#include <doctest.h>

#include <random>

#include "qhs/algebra.hpp"
#include "qhs/linalg.hpp"

using namespace qhs;

namespace {

RnPtr make(const std::string& preset, int n) {
    auto d = preset_datum(preset);
    return std::make_shared<Rn>(d, QParams::default_for(d), n);
}

// All instances of the defining relations as (word_lhs - word_rhs) token
// products; returns max |residual| count (0 when everything rewrites to 0).
int relation_residuals(const Rn& R) {
    const auto& d = R.datum();
    int n = R.strands();
    int bad = 0;
    auto check_zero = [&](const Elem& z) {
        if (!elem_is_zero(z)) ++bad;
    };
    for (const auto& nu : R.all_components()) {
        Elem enu = R.e(nu);
        // R2
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (p == q) continue;
                Elem lhs = R.nf({Token::x(p), Token::x(q), Token::e(nu)});
                Elem rhs = R.nf({Token::x(q), Token::x(p), Token::e(nu)});
                int sgn = d.p(nu[p]) * d.p(nu[q]);
                elem_axpy(lhs, rhs, sgn ? Rat(1) : Rat(-1));
                check_zero(lhs);
            }
        for (int a = 0; a + 1 < n; ++a) {
            Nu snu = nu;
            std::swap(snu[a], snu[a + 1]);
            // R3: tau_a e(nu) = e(s_a nu) tau_a
            {
                Elem lhs = R.nf({Token::t(a), Token::e(nu)});
                Elem rhs = R.nf({Token::e(snu), Token::t(a)});
                rhs = R.mul_token(rhs, Token::e(nu));
                elem_axpy(lhs, rhs, Rat(-1));
                check_zero(lhs);
            }
            // R4
            for (int p = 0; p < n; ++p) {
                if (p == a || p == a + 1) continue;
                Elem lhs = R.nf({Token::t(a), Token::x(p), Token::e(nu)});
                Elem rhs = R.nf({Token::x(p), Token::t(a), Token::e(nu)});
                int sgn = d.p(nu[p]) * d.p(nu[a]) * d.p(nu[a + 1]);
                elem_axpy(lhs, rhs, sgn ? Rat(1) : Rat(-1));
                check_zero(lhs);
            }
            // R5 both displayed forms
            {
                int sgn = d.p(nu[a]) * d.p(nu[a + 1]);
                Rat s = sgn ? Rat(-1) : Rat(1);
                Elem lhs = R.nf({Token::t(a), Token::x(a + 1), Token::e(nu)});
                elem_axpy(lhs, R.nf({Token::x(a), Token::t(a), Token::e(nu)}), -s);
                if (nu[a] == nu[a + 1]) elem_axpy(lhs, R.e(nu), Rat(-1));
                check_zero(lhs);

                Elem lhs2 = R.nf({Token::x(a + 1), Token::t(a), Token::e(nu)});
                elem_axpy(lhs2, R.nf({Token::t(a), Token::x(a), Token::e(nu)}), -s);
                if (nu[a] == nu[a + 1]) elem_axpy(lhs2, R.e(nu), Rat(-1));
                check_zero(lhs2);
            }
            // R6: tau_a^2 e(nu) = Q_{nu_a, nu_{a+1}}(x_a, x_{a+1}) e(nu)
            {
                Elem lhs = R.nf({Token::t(a), Token::t(a), Token::e(nu)});
                for (const auto& t : R.qparams().terms(nu[a], nu[a + 1])) {
                    std::vector<Token> word;
                    for (int r = 0; r < t.r; ++r) word.push_back(Token::x(a));
                    for (int s2 = 0; s2 < t.s; ++s2) word.push_back(Token::x(a + 1));
                    word.push_back(Token::e(nu));
                    elem_axpy(lhs, R.nf(word), -t.coeff);
                }
                check_zero(lhs);
            }
            // R7
            for (int b = 0; b + 1 < n; ++b) {
                if (std::abs(a - b) <= 1) continue;
                Elem lhs = R.nf({Token::t(a), Token::t(b), Token::e(nu)});
                Elem rhs = R.nf({Token::t(b), Token::t(a), Token::e(nu)});
                int sgn = d.p(nu[a]) * d.p(nu[a + 1]) * d.p(nu[b]) * d.p(nu[b + 1]);
                elem_axpy(lhs, rhs, sgn ? Rat(1) : Rat(-1));
                check_zero(lhs);
            }
        }
        // R8
        for (int a = 0; a + 2 < n; ++a) {
            Elem lhs = R.nf({Token::t(a + 1), Token::t(a), Token::t(a + 1), Token::e(nu)});
            elem_axpy(lhs, R.nf({Token::t(a), Token::t(a + 1), Token::t(a), Token::e(nu)}),
                      Rat(-1));
            if (nu[a] == nu[a + 2]) {
                int i = nu[a], j = nu[a + 1];
                for (const auto& t : R.qparams().terms(i, j)) {
                    if (!d.odd(i)) {
                        // sum_m x_a^m x_{a+2}^{r-1-m} x_{a+1}^s
                        for (int m = 0; m + 1 <= t.r; ++m) {
                            std::vector<Token> word;
                            for (int v = 0; v < m; ++v) word.push_back(Token::x(a));
                            for (int v = 0; v < t.r - 1 - m; ++v) word.push_back(Token::x(a + 2));
                            for (int v = 0; v < t.s; ++v) word.push_back(Token::x(a + 1));
                            word.push_back(Token::e(nu));
                            elem_axpy(lhs, R.nf(word), -t.coeff);
                        }
                    } else {
                        // (-1)^{p(j)} (x_{a+2}-x_a) sum_m x_a^{2m} x_{a+2}^{r-2-2m} x_{a+1}^s
                        Rat c = d.p(j) ? -t.coeff : t.coeff;
                        for (int m = 0; 2 * m + 2 <= t.r; ++m) {
                            for (int lead = 0; lead < 2; ++lead) {
                                std::vector<Token> word;
                                word.push_back(Token::x(lead == 0 ? a + 2 : a));
                                for (int v = 0; v < 2 * m; ++v) word.push_back(Token::x(a));
                                for (int v = 0; v < t.r - 2 - 2 * m; ++v)
                                    word.push_back(Token::x(a + 2));
                                for (int v = 0; v < t.s; ++v) word.push_back(Token::x(a + 1));
                                word.push_back(Token::e(nu));
                                elem_axpy(lhs, R.nf(word), lead == 0 ? -c : c);
                            }
                        }
                    }
                }
            }
            check_zero(lhs);
        }
    }
    return bad;
}

} // namespace

TEST_CASE("normal form basic examples") {
    auto R = make("A1odd", 2);
    Nu ii{0, 0};
    // e(nu) e(nu) = e(nu)
    CHECK(R->nf({Token::e(ii), Token::e(ii)}) == R->e(ii));
    // tau_1 x_2 e(i,i) = -x_1 tau_1 e(i,i) + e(i,i) for i odd
    Elem lhs = R->nf({Token::t(0), Token::x(1), Token::e(ii)});
    Elem expect = R->nf({Token::x(0), Token::t(0), Token::e(ii)});
    expect = elem_scale(expect, Rat(-1));
    elem_axpy(expect, R->e(ii), Rat(1));
    CHECK(lhs == expect);
    // tau_1^2 e(i,i) = 0
    CHECK(elem_is_zero(R->nf({Token::t(0), Token::t(0), Token::e(ii)})));
}

TEST_CASE("tau^2 on distinct residues gives Q") {
    auto R = make("A2", 2);
    Nu ij{0, 1};
    Elem lhs = R->nf({Token::t(0), Token::t(0), Token::e(ij)});
    Elem expect = R->nf({Token::x(0), Token::e(ij)});
    elem_axpy(expect, R->nf({Token::x(1), Token::e(ij)}), Rat(1));
    CHECK(lhs == expect);
}

TEST_CASE("relation soundness on all presets, n <= 3") {
    for (const auto& preset : preset_names())
        for (int n = 2; n <= 3; ++n) {
            auto R = make(preset, n);
            INFO(preset, " n=", n);
            CHECK(relation_residuals(*R) == 0);
        }
}

TEST_CASE("multiply example: skew commutation of x's") {
    auto R = make("A1odd", 2);
    Nu ii{0, 0};
    Elem a = R->nf({Token::x(1), Token::e(ii)});
    Elem b = R->nf({Token::x(0), Token::e(ii)});
    Elem prod = R->mul(a, b);
    Elem expect = elem_scale(R->nf({Token::x(0), Token::x(1), Token::e(ii)}), Rat(-1));
    CHECK(prod == expect);
}

TEST_CASE("unit is the sum of idempotents") {
    auto R = make("A2", 2);
    Elem one = R->one();
    Elem z = R->nf({Token::x(0), Token::t(0), Token::e(Nu{0, 1})});
    CHECK(R->mul(one, z) == z);
    CHECK(R->mul(z, one) == z);
}

TEST_CASE("degrees") {
    auto R = make("A2", 2);
    Nu ij{0, 1};
    // deg tau_1 e(i,j) = -(alpha_i|alpha_j) = 1, parity 0
    auto dp = R->degree_of(R->nf({Token::t(0), Token::e(ij)}));
    REQUIRE(dp.has_value());
    CHECK(dp->deg == 1);
    CHECK(dp->par == 0);
    // x_1 e(i) in rank-1 odd: degree 2, parity 1
    auto R1 = make("A1odd", 1);
    auto dp1 = R1->degree_of(R1->nf({Token::x(0), Token::e(Nu{0})}));
    REQUIRE(dp1.has_value());
    CHECK(dp1->deg == 2);
    CHECK(dp1->par == 1);
    // inhomogeneous
    Elem mix = R1->e(Nu{0});
    elem_axpy(mix, R1->nf({Token::x(0), Token::e(Nu{0})}), Rat(1));
    CHECK(!R1->degree_of(mix).has_value());
}

TEST_CASE("grading is additive under multiplication") {
    std::mt19937 rng(7);
    for (const auto& preset : preset_names()) {
        auto R = make(preset, 3);
        auto monos = R->pbw_basis_of_degree(R->all_components(), 2);
        auto monos2 = R->pbw_basis_of_degree(R->all_components(), -1);
        auto check_pair = [&](const PBWMono& a, const PBWMono& b) {
            Elem ea{{a, Rat(1)}}, eb{{b, Rat(1)}};
            Elem prod = R->mul(ea, eb);
            if (elem_is_zero(prod)) return;
            auto dp = R->degree_of(prod);
            REQUIRE(dp.has_value());
            DegPar da = R->mono_degpar(a), db = R->mono_degpar(b);
            CHECK(dp->deg == da.deg + db.deg);
            CHECK(dp->par == ((da.par + db.par) & 1));
        };
        for (int trial = 0; trial < 10 && !monos.empty() && !monos2.empty(); ++trial)
            check_pair(monos[rng() % monos.size()], monos2[rng() % monos2.size()]);
    }
}

TEST_CASE("associativity on random homogeneous triples") {
    std::mt19937 rng(42);
    for (const auto& preset : preset_names()) {
        auto d = preset_datum(preset);
        for (int h = 2; h <= 3; ++h) {
            for (const auto& beta : qplus_of_height(d.rank, h)) {
                auto R = make(preset, h);
                auto comps = R->components(beta);
                if (comps.empty()) continue;
                std::vector<PBWMono> pool;
                for (int deg = -4; deg <= 4; ++deg) {
                    auto ms = R->pbw_basis_of_degree(comps, deg);
                    pool.insert(pool.end(), ms.begin(), ms.end());
                }
                if (pool.size() < 3) continue;
                int trials = preset == std::string("A2") ? 8 : 12;
                for (int t = 0; t < trials; ++t) {
                    Elem a{{pool[rng() % pool.size()], Rat(1 + int(rng() % 3))}};
                    Elem b{{pool[rng() % pool.size()], Rat(1)}};
                    Elem c{{pool[rng() % pool.size()], Rat(2)}};
                    Elem ab_c = R->mul(R->mul(a, b), c);
                    Elem a_bc = R->mul(a, R->mul(b, c));
                    CHECK(ab_c == a_bc);
                }
            }
        }
    }
}

TEST_CASE("normal form is idempotent and order independent") {
    auto R = make("A2", 3);
    Nu nu{0, 1, 0};
    std::vector<Token> word{Token::t(1), Token::t(0), Token::x(1), Token::t(1), Token::e(nu)};
    Elem z = R->nf(word);
    // multiplying the normal form by the unit must not change it
    CHECK(R->mul(R->one(), z) == z);
    // association order: ((t1 t0) (x1 t1)) e(nu) vs fold
    Elem left = R->nf({Token::t(1), Token::t(0)});
    Elem right = R->nf({Token::x(1), Token::t(1), Token::e(nu)});
    CHECK(R->mul(left, right) == z);
}

TEST_CASE("graded_dim_series examples") {
    // rank-1, beta = alpha_i: degrees 0, 2, 4, ... each with coefficient 1
    auto R1 = make("A1", 1);
    SuperScalar s1 = R1->graded_dim_series(Nu{0}, Nu{0}, 6);
    for (int deg = 0; deg <= 6; deg += 2) CHECK(s1.even().at(deg) == 1);
    CHECK(s1.even().at(1) == 0);
    // rank-1, beta = 2 alpha_i: degree -2 coefficient 1 (tau_1 e(i,i))
    auto R2 = make("A1", 2);
    SuperScalar s2 = R2->graded_dim_series(Nu{0, 0}, Nu{0, 0}, 2);
    CHECK(s2.even().at(-2) == 1);
    // A2, beta = a1 + a2, nu = (1,2), mu = (2,1): lowest term q^{+1}
    auto R3 = make("A2", 2);
    SuperScalar s3 = R3->graded_dim_series(Nu{0, 1}, Nu{1, 0}, 5);
    CHECK(s3.even().at(1) == 1);
    CHECK(s3.even().min_deg() == 1);
    // odd strands contribute to the odd part
    auto R4 = make("A1odd", 1);
    SuperScalar s4 = R4->graded_dim_series(Nu{0}, Nu{0}, 4);
    CHECK(s4.even().at(0) == 1);
    CHECK(s4.odd().at(2) == 1);
    CHECK(s4.even().at(4) == 1);
}

TEST_CASE("demazure rewriting identity inside the algebra") {
    // tau_k f = (oS_k f) tau_k + d_k f and f tau_k = tau_k (oS_k f) + f^{d_k}
    std::mt19937 rng(3);
    for (const auto& preset : preset_names()) {
        auto d = preset_datum(preset);
        auto R = make(preset, 3);
        for (const auto& nu : R->all_components()) {
            for (int k = 0; k + 1 < 3; ++k) {
                for (int trial = 0; trial < 4; ++trial) {
                    // random skew monomial of degree <= 6
                    Exps e = 0;
                    for (int pos = 0; pos < 3; ++pos) e = exp_set(e, pos, rng() % 3);
                    Poly f{{e, Rat(1 + int(rng() % 2))}};
                    Nu snu = nu;
                    std::swap(snu[k], snu[k + 1]);
                    // left: tau_k (f e(nu))
                    std::vector<Token> fw;
                    auto append_poly = [&](const Poly& p, const Nu& comp,
                                           std::vector<Token> head) {
                        Elem acc;
                        for (const auto& [pe, pc] : p) {
                            std::vector<Token> w = head;
                            for (int pos = 0; pos < 3; ++pos)
                                for (int v = 0; v < exp_at(pe, pos); ++v)
                                    w.push_back(Token::x(pos));
                            w.push_back(Token::e(comp));
                            elem_axpy(acc, R->nf(w), pc);
                        }
                        return acc;
                    };
                    Elem lhs = R->mul(R->tau(k), append_poly(f, nu, {}));
                    Elem rhs = append_poly(oS(d, nu, k, f, 3), snu, {});
                    rhs = R->mul(rhs, R->nf({Token::t(k), Token::e(nu)}));
                    elem_axpy(rhs, append_poly(demazure_left(d, nu, k, f, 3), nu, {}), Rat(1));
                    CHECK(lhs == rhs);
                    // right: (f e(nu)) tau_k ... note f e(nu) tau_k = f tau_k e(snu)
                    Elem lhs2 = R->mul(append_poly(f, nu, {}), R->tau(k));
                    Elem rhs2 = R->mul(R->tau(k), append_poly(oS(d, nu, k, f, 3), snu, {}));
                    elem_axpy(rhs2, append_poly(demazure_right(d, nu, k, f, 3), nu, {}), Rat(1));
                    CHECK(lhs2 == rhs2);
                }
            }
        }
    }
}

TEST_CASE("intertwiner examples") {
    auto R = make("A2", 2);
    // restricted to e(i,j), i != j: phi_1 e(i,j) = tau_1 e(i,j)
    Elem phi = R->intertwiner_phi(0);
    Elem restricted = R->mul_token(phi, Token::e(Nu{0, 1}));
    CHECK(restricted == R->nf({Token::t(0), Token::e(Nu{0, 1})}));
    // phi_1 e(i,i) for even i: (1 - (x_2 - x_1) tau_1) e(i,i)
    Elem r2 = R->mul_token(phi, Token::e(Nu{0, 0}));
    Elem expect = R->e(Nu{0, 0});
    elem_axpy(expect, R->nf({Token::x(1), Token::t(0), Token::e(Nu{0, 0})}), Rat(-1));
    elem_axpy(expect, R->nf({Token::x(0), Token::t(0), Token::e(Nu{0, 0})}), Rat(1));
    CHECK(r2 == expect);
}

TEST_CASE("intertwiner relations in R(3)") {
    for (const auto& preset : preset_names()) {
        auto dd = preset_datum(preset);
        auto R = make(preset, 3);
        Elem phi1 = R->intertwiner_phi(0), phi2 = R->intertwiner_phi(1);
        Elem g1 = R->intertwiner_g(0), g2 = R->intertwiner_g(1);
        // tau_1 phi_2 phi_1 = phi_2 phi_1 tau_2
        Elem lhs = R->mul(R->tau(0), R->mul(phi2, phi1));
        Elem rhs = R->mul(R->mul(phi2, phi1), R->tau(1));
        CHECK(lhs == rhs);
        Elem lhs_g = R->mul(R->tau(0), R->mul(g2, g1));
        Elem rhs_g = R->mul(R->mul(g2, g1), R->tau(1));
        CHECK(lhs_g == rhs_g);
        // phi_a e(nu) = e(s_a nu) phi_a and the x-commutation
        for (int a = 0; a < 2; ++a) {
            Elem phia = R->intertwiner_phi(a);
            Elem ga = R->intertwiner_g(a);
            for (const auto& nu : R->all_components()) {
                Nu snu = nu;
                std::swap(snu[a], snu[a + 1]);
                for (const Elem* f : {&phia, &ga}) {
                    Elem l = R->mul_token(*f, Token::e(nu));
                    Elem r = R->mul_token_left(Token::e(snu), l);
                    CHECK(l == r);
                }
                for (int b = 0; b < 3; ++b) {
                    int sb = b == a ? a + 1 : b == a + 1 ? a : b;
                    int sgn = dd.p(nu[a]) * dd.p(nu[a + 1]) * dd.p(nu[b]);
                    for (const Elem* f : {&phia, &ga}) {
                        Elem l = R->mul(R->x(sb), R->mul_token(*f, Token::e(nu)));
                        Elem r = R->mul(*f, R->nf({Token::x(b), Token::e(nu)}));
                        elem_axpy(l, r, sgn ? Rat(1) : Rat(-1));
                        CHECK(elem_is_zero(l));
                    }
                }
            }
        }
    }
}

TEST_CASE("psi is an involutive anti-automorphism") {
    auto R = make("B2odd", 2);
    Nu nu{0, 1};
    Elem z = R->nf({Token::x(0), Token::t(0), Token::e(nu)});
    Elem w = R->nf({Token::t(0), Token::x(1), Token::e(Nu{1, 0})});
    CHECK(R->psi(R->psi(z)) == z);
    CHECK(R->psi(R->mul(z, w)) == R->mul(R->psi(w), R->psi(z)));
}

TEST_CASE("R(n+1) is free of rank n+1 over R(n,1)") {
    // The multiplication map  (+)_a R(n,1) tau_n ... tau_a -> R(n+1)  sends
    // the PBW basis of R(n,1) paired with the n+1 tails to a basis: on each
    // degree the image count matches dim R(n+1)_d and the images are
    // linearly independent.
    for (const auto& preset : {"A1odd", "A2"}) {
        for (int n = 1; n <= 2; ++n) {
            auto Rbig = make(preset, n + 1);
            std::map<int, std::vector<Elem>> images;
            for (int dz = -6; dz <= 6; ++dz) {
                for (const auto& m : Rbig->pbw_basis_of_degree(Rbig->all_components(), dz)) {
                    Perm w = unpack_perm(m.w, n + 1);
                    if (w[n] != n) continue;  // restrict to R(n,1) = R(n) (x) k^I[x]
                    for (int a0 = 0; a0 <= n; ++a0) {
                        Elem z{{m, Rat(1)}};
                        for (int letter = n - 1; letter >= a0; --letter)
                            z = Rbig->mul(z, Rbig->tau(letter));
                        REQUIRE(!elem_is_zero(z));
                        auto dp = Rbig->degree_of(z);
                        REQUIRE(dp.has_value());
                        images[dp->deg].push_back(std::move(z));
                    }
                }
            }
            for (int deg = -2; deg <= 2; ++deg) {
                auto monos = Rbig->pbw_basis_of_degree(Rbig->all_components(), deg);
                std::map<PBWMono, int> col;
                for (const auto& m : monos) col.emplace(m, (int)col.size());
                Echelon span;
                int count = 0;
                for (const auto& z : images[deg]) {
                    SparseVec v;
                    for (const auto& [m, c] : z) v[col.at(m)] = c;
                    CHECK(span.insert(std::move(v)));
                    ++count;
                }
                CHECK(count == (int)monos.size());
                CHECK(span.rank() == (int)monos.size());
            }
        }
    }
}
