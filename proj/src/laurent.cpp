#include "qhs/laurent.hpp"

#include <sstream>

namespace qhs {

Laurent Laurent::monomial(int deg, Rat c) {
    Laurent r;
    if (c != 0) r.coeff_[deg] = std::move(c);
    return r;
}

Rat Laurent::at(int deg) const {
    auto it = coeff_.find(deg);
    return it == coeff_.end() ? Rat(0) : it->second;
}

int Laurent::min_deg() const {
    if (coeff_.empty()) throw std::logic_error("min_deg of zero polynomial");
    return coeff_.begin()->first;
}

int Laurent::max_deg() const {
    if (coeff_.empty()) throw std::logic_error("max_deg of zero polynomial");
    return coeff_.rbegin()->first;
}

void Laurent::trim(int deg) {
    auto it = coeff_.find(deg);
    if (it != coeff_.end() && it->second == 0) coeff_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [d, c] : o.coeff_) {
        coeff_[d] += c;
        trim(d);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [d, c] : o.coeff_) {
        coeff_[d] -= c;
        trim(d);
    }
    return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [d1, c1] : coeff_)
        for (const auto& [d2, c2] : o.coeff_) {
            r.coeff_[d1 + d2] += c1 * c2;
            r.trim(d1 + d2);
        }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [d, c] : coeff_) r.coeff_[d] = -c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [d, c] : coeff_) r.coeff_[d + k] = c;
    return r;
}

Laurent Laurent::substitute_power(int m) const {
    Laurent r;
    for (const auto& [d, c] : coeff_) r.coeff_[d * m] += c;
    return r;
}

Laurent Laurent::bar() const { return substitute_power(-1); }

std::optional<Laurent> Laurent::divide(const Laurent& d) const {
    if (d.is_zero()) return std::nullopt;
    Laurent rem = *this, quot;
    const int dd = d.max_deg();
    const Rat& lead = d.coeff_.rbegin()->second;
    while (!rem.is_zero()) {
        int rd = rem.max_deg();
        Rat f = rem.coeff_.rbegin()->second / lead;
        Laurent term = Laurent::monomial(rd - dd, f);
        quot += term;
        rem -= term * d;
        if (!rem.is_zero() && rem.max_deg() >= rd) return std::nullopt;
    }
    return quot;
}

bool Laurent::integral() const {
    for (const auto& [d, c] : coeff_)
        if (!is_integer(c)) return false;
    return true;
}

void Laurent::set(int deg, Rat c) {
    if (c == 0) coeff_.erase(deg);
    else coeff_[deg] = std::move(c);
}

std::string Laurent::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeff_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (d != 0) os << "*q^" << d;
    }
    return os.str();
}

SuperScalar SuperScalar::monomial(int qdeg, int parity, Rat c) {
    Laurent m = Laurent::monomial(qdeg, std::move(c));
    if (parity % 2) return SuperScalar(Laurent(), std::move(m));
    return SuperScalar(std::move(m), Laurent());
}

SuperScalar& SuperScalar::operator+=(const SuperScalar& o) {
    ev_ += o.ev_;
    od_ += o.od_;
    return *this;
}

SuperScalar& SuperScalar::operator-=(const SuperScalar& o) {
    ev_ -= o.ev_;
    od_ -= o.od_;
    return *this;
}

SuperScalar SuperScalar::operator*(const SuperScalar& o) const {
    // (a + pi b)(c + pi d) = (ac + bd) + pi(ad + bc), using pi^2 = 1.
    return SuperScalar(ev_ * o.ev_ + od_ * o.od_, ev_ * o.od_ + od_ * o.ev_);
}

std::optional<SuperScalar> SuperScalar::divide(const SuperScalar& d) const {
    // Work in the eigenbasis of pi: components at pi=1 and pi=-1.
    Laurent u = at_pi_one(), v = at_pi_minus_one();
    Laurent du = d.at_pi_one(), dv = d.at_pi_minus_one();
    std::optional<Laurent> qu, qv;
    if (u.is_zero()) qu = Laurent();
    else { qu = u.divide(du); if (!qu) return std::nullopt; }
    if (v.is_zero()) qv = Laurent();
    else { qv = v.divide(dv); if (!qv) return std::nullopt; }
    Laurent ev = *qu + *qv, od = *qu - *qv;
    // halve
    Laurent half(Rat(1, 2));
    return SuperScalar(ev * half, od * half);
}

std::string SuperScalar::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (!ev_.is_zero()) s += ev_.str();
    if (!od_.is_zero()) {
        if (!s.empty()) s += " + ";
        s += "pi*(" + od_.str() + ")";
    }
    return s;
}

Laurent q_integer(int n, int qi_power) {
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
    if (n < 0) return -q_integer(-n, qi_power);
    Laurent r;
    for (int k = 0; k < n; ++k) r += Laurent::monomial((n - 1 - 2 * k) * qi_power);
    return r;
}

Laurent q_factorial(int n, int qi_power) {
    Laurent r{Rat(1)};
    for (int k = 1; k <= n; ++k) r = r * q_integer(k, qi_power);
    return r;
}

SuperScalar super_q_integer(int n, int qi_power, int parity) {
    // [n]^pi_i = ((pi_i q_i)^n - q_i^{-n}) / (pi_i q_i - q_i^{-1})
    //          = sum_{k=0}^{n-1} (pi_i q_i)^{n-1-k} q_i^{-k}.
    if (n < 0) throw std::invalid_argument("super_q_integer: negative n");
    SuperScalar r;
    for (int k = 0; k < n; ++k)
        r += SuperScalar::monomial((n - 1 - 2 * k) * qi_power, parity * (n - 1 - k));
    return r;
}

SuperScalar super_q_factorial(int n, int qi_power, int parity) {
    if (n < 0) throw std::invalid_argument("super_q_factorial: negative n");
    SuperScalar r = SuperScalar::one();
    for (int k = 1; k <= n; ++k) r = r * super_q_integer(k, qi_power, parity);
    return r;
}

} // namespace qhs
