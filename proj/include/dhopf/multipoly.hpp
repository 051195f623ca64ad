#pragma once

#include "formal_sum.hpp"
#include "nat.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dhopf {

// Indexed variable such as w3 or v1.
struct Var {
    char family;
    unsigned index;
    friend auto operator<=>(const Var &, const Var &) = default;
    std::string str() const { return std::string(1, family) + std::to_string(index); }
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Var v, unsigned e = 1) {
        if (e) exps_[v] = e;
    }

    const std::map<Var, unsigned> &exps() const { return exps_; }
    unsigned degree() const {
        unsigned d = 0;
        for (const auto &kv : exps_) d += kv.second;
        return d;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b) {
        Monomial m = a;
        for (const auto &[v, e] : b.exps_) m.exps_[v] += e;
        return m;
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    // Graded, then lexicographic on (variable, exponent) pairs.
    friend bool operator<(const Monomial &a, const Monomial &b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exps_ < b.exps_;
    }

    std::string str() const {
        std::string s;
        for (const auto &[v, e] : exps_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::map<Var, unsigned> exps_;
};

// Polynomial with exact rational coefficients in indexed variables.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational &c) : s_(Monomial(), c) {}
    MultiPoly(long c) : s_(Monomial(), Rational(c)) {}
    explicit MultiPoly(Var v) : s_(Monomial(v), 1) {}

    static MultiPoly var(char family, unsigned index) { return MultiPoly(Var{family, index}); }

    const FormalSum<Monomial> &terms() const { return s_; }
    bool is_zero() const { return s_.empty(); }
    Rational coeff(const Monomial &m) const { return s_.coeff(m); }

    MultiPoly &operator+=(const MultiPoly &o) {
        s_ += o.s_;
        return *this;
    }
    MultiPoly &operator-=(const MultiPoly &o) {
        s_ -= o.s_;
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) {
        a.s_ *= Rational(-1);
        return a;
    }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
        MultiPoly out;
        for (const auto &[ma, ca] : a.s_)
            for (const auto &[mb, cb] : b.s_) out.s_.add(ma * mb, ca * cb);
        return out;
    }
    MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }
    friend MultiPoly operator/(MultiPoly a, const Rational &q) {
        a.s_ *= Rational(1 / q);
        return a;
    }
    friend bool operator==(const MultiPoly &a, const MultiPoly &b) { return a.s_ == b.s_; }

    bool integral() const {
        for (const auto &kv : s_)
            if (!is_integral(kv.second)) return false;
        return true;
    }

    std::set<Var> variables() const {
        std::set<Var> vs;
        for (const auto &kv : s_)
            for (const auto &ve : kv.first.exps()) vs.insert(ve.first);
        return vs;
    }

    Rational evaluate(const std::map<Var, Rational> &at) const {
        Rational s = 0;
        for (const auto &[m, c] : s_) {
            Rational t = c;
            for (const auto &[v, e] : m.exps()) {
                auto it = at.find(v);
                if (it == at.end()) throw domain_error("MultiPoly::evaluate: no value for " + v.str());
                t *= rpow(it->second, e);
            }
            s += t;
        }
        return s;
    }

    std::string str() const {
        return render_sum(s_, [](const Monomial &m) { return m.str(); });
    }

private:
    FormalSum<Monomial> s_;
};

inline Rational ring_pow(const Rational &x, unsigned e) { return rpow(x, e); }

inline MultiPoly ring_pow(const MultiPoly &x, unsigned e) {
    MultiPoly out(1L), base = x;
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

} // namespace dhopf
