#pragma once

#include "nat.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dhopf {

// Finite linear combination of basis symbols with rational coefficients.
// Terms are kept sorted by key and never carry a zero coefficient.
template <class Key, class Compare = std::less<Key>>
class FormalSum {
public:
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    FormalSum() = default;
    FormalSum(const Key &k, const Rational &c = 1) { add(k, c); }

    FormalSum &add(const Key &k, const Rational &c) {
        if (sgn(c) == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
        return *this;
    }

    Rational coeff(const Key &k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type &terms() const { return terms_; }

    FormalSum &operator+=(const FormalSum &o) {
        for (const auto &[k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum &operator-=(const FormalSum &o) {
        for (const auto &[k, c] : o.terms_) add(k, -c);
        return *this;
    }
    FormalSum &operator*=(const Rational &s) {
        if (sgn(s) == 0) {
            terms_.clear();
        } else {
            for (auto &kv : terms_) kv.second *= s;
        }
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const Rational &s) { return a *= s; }
    friend FormalSum operator*(const Rational &s, FormalSum a) { return a *= s; }
    friend bool operator==(const FormalSum &a, const FormalSum &b) { return a.terms_ == b.terms_; }

    Rational total_mass() const {
        Rational s = 0;
        for (const auto &kv : terms_) s += kv.second;
        return s;
    }

    template <class F>
    auto map_keys(F f) const {
        using K2 = std::decay_t<decltype(f(std::declval<const Key &>()))>;
        FormalSum<K2> out;
        for (const auto &[k, c] : terms_) out.add(f(k), c);
        return out;
    }

private:
    map_type terms_;
};

// Tensor legs n_(1) (x) n_(2) (x) ... as an ordered tuple of naturals.
using Legs = std::vector<Nat>;
using TensorSum = FormalSum<Legs>;

inline Legs legs(std::initializer_list<Nat> ns) { return Legs(ns); }

// Linear extension of `f` on leg `i`: each term's i-th leg is replaced by the
// legs of f(leg), increasing the arity accordingly.
template <class F>
TensorSum apply_on_leg(const TensorSum &t, std::size_t i, F f) {
    TensorSum out;
    for (const auto &[k, c] : t) {
        const TensorSum inner = f(k.at(i));
        for (const auto &[ik, ic] : inner) {
            Legs nk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i));
            nk.insert(nk.end(), ik.begin(), ik.end());
            nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(i) + 1, k.end());
            out.add(nk, c * ic);
        }
    }
    return out;
}

// Product in the tensor power of a commutative monoid: (a(x)b)(c(x)d) = ac (x) bd.
template <class Op>
TensorSum legwise_product(const TensorSum &a, const TensorSum &b, Op op) {
    TensorSum out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            if (ka.size() != kb.size()) throw domain_error("legwise_product: arity mismatch");
            Legs k(ka.size());
            for (std::size_t i = 0; i < ka.size(); ++i) k[i] = op(ka[i], kb[i]);
            out.add(k, ca * cb);
        }
    }
    return out;
}

inline TensorSum swap_legs(const TensorSum &t) {
    return t.map_keys([](const Legs &k) { return Legs(k.rbegin(), k.rend()); });
}

inline std::string render_legs(const Legs &k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += k[i].str();
    }
    return s + ")";
}

// Renders "c*key + ..." with unit coefficients suppressed and a leading minus
// folded into the separator.
template <class Key, class Compare, class KeyFmt>
std::string render_sum(const FormalSum<Key, Compare> &s, KeyFmt fmt, const char *sep = "*") {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : s) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (a != 1) os << a.get_str() << sep;
        os << fmt(k);
        first = false;
    }
    return os.str();
}

inline std::string render(const TensorSum &t) { return render_sum(t, render_legs); }

} // namespace dhopf
