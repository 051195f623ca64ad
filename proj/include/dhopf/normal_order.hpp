#pragma once

#include "formal_sum.hpp"
#include "nat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dhopf {

// :a+^dag a^low: for a single bosonic mode.
struct NormalMonomial {
    unsigned dag = 0;
    unsigned low = 0;

    unsigned grade() const { return dag + low; }
    bool balanced() const { return dag == low; }

    friend bool operator==(const NormalMonomial &, const NormalMonomial &) = default;
    // Highest grade first, then higher creation power first.
    friend bool operator<(const NormalMonomial &x, const NormalMonomial &y) {
        if (x.grade() != y.grade()) return x.grade() > y.grade();
        return x.dag > y.dag;
    }
};

using OperatorSum = FormalSum<NormalMonomial>;

inline std::string render(const NormalMonomial &m) {
    if (m.grade() == 0) return "1";
    auto letter = [](const char *s, unsigned e) {
        std::string out = s;
        if (e > 1) out += "^" + std::to_string(e);
        return out;
    };
    std::string s = ":";
    if (m.dag) s += letter("a†", m.dag);
    if (m.dag && m.low) s += " ";
    if (m.low) s += letter("a", m.low);
    return s + ":";
}

inline std::string render(const OperatorSum &s) {
    return render_sum(s, [](const NormalMonomial &m) { return render(m); }, " ");
}

// Binomially weighted coproduct of :a+^m a^n:.
inline FormalSum<std::pair<NormalMonomial, NormalMonomial>> coproduct_unrenorm(const NormalMonomial &x) {
    FormalSum<std::pair<NormalMonomial, NormalMonomial>> out;
    for (unsigned i = 0; i <= x.dag; ++i)
        for (unsigned j = 0; j <= x.low; ++j)
            out.add({{i, j}, {x.dag - i, x.low - j}}, Rational(binomial(x.dag, i) * binomial(x.low, j)));
    return out;
}

// Laplace pairing from F(a, a+) = 1 and F(a+, a) = F(a, a) = F(a+, a+) = 0,
// expanded by peeling one letter off u and pairing it against the
// unrenormalized coproduct of v.
inline Rational pairing_F(const NormalMonomial &u, const NormalMonomial &v) {
    if (u.grade() != v.grade()) return 0;
    if (u.grade() == 0) return 1;
    if (u.grade() == 1) return (u.low == 1 && v.dag == 1) ? 1 : 0;
    const NormalMonomial letter = u.dag ? NormalMonomial{1, 0} : NormalMonomial{0, 1};
    const NormalMonomial rest = u.dag ? NormalMonomial{u.dag - 1, u.low} : NormalMonomial{u.dag, u.low - 1};
    Rational s = 0;
    for (const auto &[k, c] : coproduct_unrenorm(v)) {
        if (k.first.grade() != 1) continue;
        const Rational f = pairing_F(letter, k.first);
        if (sgn(f) == 0) continue;
        s += c * f * pairing_F(rest, k.second);
    }
    return s;
}

// u o v = sum F(u_(1), v_(1)) u_(2) v_(2) over unrenormalized coproducts.
inline OperatorSum circle_op(const NormalMonomial &u, const NormalMonomial &v) {
    OperatorSum out;
    const auto cu = coproduct_unrenorm(u), cv = coproduct_unrenorm(v);
    for (const auto &[ku, xu] : cu)
        for (const auto &[kv, xv] : cv) {
            const Rational f = pairing_F(ku.first, kv.first);
            if (sgn(f) == 0) continue;
            out.add({ku.second.dag + kv.second.dag, ku.second.low + kv.second.low}, xu * xv * f);
        }
    return out;
}

// :a+^r a^s: o :a+^m a^n: = sum_k k! C(s,k) C(m,k) :a+^(r+m-k) a^(s+n-k):.
inline OperatorSum circle_op_closed(const NormalMonomial &u, const NormalMonomial &v) {
    OperatorSum out;
    for (unsigned k = 0; k <= std::min(u.low, v.dag); ++k)
        out.add({u.dag + v.dag - k, u.low + v.low - k},
                Rational(factorial(k) * binomial(u.low, k) * binomial(v.dag, k)));
    return out;
}

inline OperatorSum circle_op(const OperatorSum &x, const OperatorSum &y) {
    OperatorSum out;
    for (const auto &[kx, cx] : x)
        for (const auto &[ky, cy] : y) out += circle_op_closed(kx, ky) * (cx * cy);
    return out;
}

inline OperatorSum circle_power(const OperatorSum &x, unsigned n) {
    OperatorSum out(NormalMonomial{0, 0}, 1);
    for (unsigned i = 0; i < n; ++i) out = circle_op(out, x);
    return out;
}

struct Annihilation {
    Nat coefficient;
    std::optional<unsigned> power;
};

// a acting on (a+)^n |0>: n (a+)^(n-1); the vacuum is annihilated.
inline Annihilation derive_annihilate(unsigned n) {
    if (n == 0) return {Nat(), std::nullopt};
    return {Nat(n), n - 1};
}

// [a, a+] = 1 on (a+)^n |0>: (n + 1) - n = 1.
inline bool ccr_check(unsigned n) {
    const auto lhs = derive_annihilate(n + 1);
    const auto inner = derive_annihilate(n);
    const Integer left = lhs.coefficient.value();
    const Integer right = inner.power ? inner.coefficient.value() : Integer(0);
    return lhs.power == n && left - right == 1;
}

inline Rational inner_product(unsigned n, unsigned m) {
    Integer c = 1;
    unsigned power = m;
    for (unsigned i = 0; i < n; ++i) {
        const auto step = derive_annihilate(power);
        if (!step.power) return 0;
        c *= step.coefficient.value();
        power = *step.power;
    }
    if (power != 0) return 0;
    return Rational(c) / Rational(factorial(n));
}

// S(n, k) = sum_{j=0..k} (-1)^(k-j) j^n / (j! (k-j)!).
inline Integer stirling2(unsigned n, unsigned k) {
    Rational s = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Rational t(ipow(Integer(j), n), factorial(j) * factorial(k - j));
        t.canonicalize();
        if ((k - j) % 2) s -= t;
        else s += t;
    }
    if (!is_integral(s)) throw std::logic_error("stirling2: non-integral value");
    return s.get_num();
}

// Rows 0..N of the triangle from S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::vector<std::vector<Integer>> stirling2_recurrence(unsigned N) {
    std::vector<std::vector<Integer>> s(N + 1, std::vector<Integer>(N + 1));
    s[0][0] = 1;
    for (unsigned n = 1; n <= N; ++n)
        for (unsigned k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

inline OperatorSum number_operator() { return OperatorSum(NormalMonomial{1, 1}, 1); }

// Coefficients of :a+^k a^k:, k = 0..n, in the n-th circle power of :a+ a:.
inline std::vector<Integer> stirling2_from_circle(unsigned n) {
    const OperatorSum p = circle_power(number_operator(), n);
    std::vector<Integer> row(n + 1);
    for (const auto &[m, c] : p) {
        if (!m.balanced() || !is_integral(c)) throw std::logic_error("stirling2_from_circle: unexpected term");
        row.at(m.dag) = c.get_num();
    }
    return row;
}

// R(:a+^k a^k:) = :a+^(k+1) a^(k+1): / (k + 1).
inline OperatorSum rota_baxter_R(const OperatorSum &x) {
    OperatorSum out;
    for (const auto &[m, c] : x) {
        if (!m.balanced()) throw domain_error("rota_baxter_R: unbalanced monomial " + render(m));
        out.add({m.dag + 1, m.low + 1}, c / Rational(m.dag + 1));
    }
    return out;
}

inline OperatorSum rota_baxter_power(unsigned k) {
    OperatorSum x(NormalMonomial{0, 0}, 1);
    for (unsigned i = 0; i < k; ++i) x = rota_baxter_R(x);
    return x;
}

inline bool main_theorem_check(unsigned n) {
    const OperatorSum lhs = circle_power(rota_baxter_R(OperatorSum(NormalMonomial{}, 1)), n);
    OperatorSum rhs;
    for (unsigned k = 1; k <= n; ++k)
        rhs += rota_baxter_power(k) * Rational(factorial(k) * stirling2(n, k));
    return lhs == rhs;
}

struct RotaBaxterReport {
    // R(x) R(y) = R(R(x) y + x R(y) + x y)
    bool standard_weight_one = true;
    // R(x) R(y) = R(R(x) y + x R(y) + R(x y))
    bool r_inside_variant = true;
};

// Tests both readings of the weight-one identity on balanced basis pairs of
// grade at most max_grade each.
inline RotaBaxterReport rota_baxter_diagnostic(unsigned max_grade = 8) {
    RotaBaxterReport rep;
    for (unsigned i = 0; 2 * i <= max_grade; ++i)
        for (unsigned j = 0; 2 * j <= max_grade; ++j) {
            const OperatorSum x(NormalMonomial{i, i}, 1), y(NormalMonomial{j, j}, 1);
            const OperatorSum rx = rota_baxter_R(x), ry = rota_baxter_R(y);
            const OperatorSum lhs = circle_op(rx, ry);
            const OperatorSum xy = circle_op(x, y);
            const OperatorSum mixed = circle_op(rx, y) + circle_op(x, ry);
            if (rota_baxter_R(mixed + xy) != lhs) rep.standard_weight_one = false;
            if (rota_baxter_R(mixed + rota_baxter_R(xy)) != lhs) rep.r_inside_variant = false;
        }
    return rep;
}

} // namespace dhopf
