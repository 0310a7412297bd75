#pragma once

#include <map>
#include <string>
#include <optional>
#include <stdexcept>

#include "qhs/rational.hpp"

namespace qhs {

// Sparse Laurent polynomial in q with rational coefficients.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(Rat c) { if (c != 0) coeff_[0] = std::move(c); }
    static Laurent monomial(int deg, Rat c = Rat(1));

    bool is_zero() const { return coeff_.empty(); }
    const std::map<int, Rat>& coeffs() const { return coeff_; }
    Rat at(int deg) const;
    int min_deg() const;   // throws on zero
    int max_deg() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }

    Laurent shifted(int k) const;            // multiply by q^k
    Laurent substitute_power(int m) const;   // q -> q^m
    Laurent bar() const;                     // q -> q^{-1}
    // Exact division; nullopt if the division does not come out exactly.
    std::optional<Laurent> divide(const Laurent& d) const;
    bool integral() const;                   // all coefficients in Z

    void set(int deg, Rat c);
    std::string str() const;

private:
    std::map<int, Rat> coeff_;
    void trim(int deg);
};

// Element of Z[q,q^-1,pi]/(pi^2-1), stored as even and odd parts:
//   f = ev + pi * od.
// Rational coefficients are allowed internally; the integrality of a
// particular value can be asserted with integral().
class SuperScalar {
public:
    SuperScalar() = default;
    SuperScalar(Laurent ev, Laurent od) : ev_(std::move(ev)), od_(std::move(od)) {}
    explicit SuperScalar(Rat c) : ev_(Laurent(std::move(c))) {}
    static SuperScalar monomial(int qdeg, int parity, Rat c = Rat(1));
    static SuperScalar one() { return SuperScalar(Rat(1)); }

    const Laurent& even() const { return ev_; }
    const Laurent& odd() const { return od_; }
    bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }
    bool operator==(const SuperScalar& o) const { return ev_ == o.ev_ && od_ == o.od_; }

    SuperScalar& operator+=(const SuperScalar& o);
    SuperScalar& operator-=(const SuperScalar& o);
    SuperScalar operator+(const SuperScalar& o) const { auto r = *this; r += o; return r; }
    SuperScalar operator-(const SuperScalar& o) const { auto r = *this; r -= o; return r; }
    SuperScalar operator*(const SuperScalar& o) const;
    SuperScalar operator-() const { return SuperScalar(-ev_, -od_); }

    SuperScalar shifted(int k) const { return SuperScalar(ev_.shifted(k), od_.shifted(k)); }
    SuperScalar substitute_power(int m) const
    { return SuperScalar(ev_.substitute_power(m), od_.substitute_power(m)); }
    SuperScalar bar() const { return SuperScalar(ev_.bar(), od_.bar()); }
    SuperScalar pi_twist() const { return SuperScalar(od_, ev_); }   // multiply by pi
    Laurent at_pi_one() const { return ev_ + od_; }
    Laurent at_pi_minus_one() const { return ev_ - od_; }

    // Exact division in the ring (componentwise at pi = +-1).
    std::optional<SuperScalar> divide(const SuperScalar& d) const;
    bool integral() const { return ev_.integral() && od_.integral(); }

    std::string str() const;

private:
    Laurent ev_, od_;
};

// q-integers.  [n]_i at q -> q^{s} and the super versions of 4.2.
Laurent q_integer(int n, int qi_power);                 // [n]_i, q_i = q^{qi_power}
Laurent q_factorial(int n, int qi_power);
SuperScalar super_q_integer(int n, int qi_power, int parity);   // [n]^pi_i
SuperScalar super_q_factorial(int n, int qi_power, int parity); // [n]^pi_i!

} // namespace qhs
