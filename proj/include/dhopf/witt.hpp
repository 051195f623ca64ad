#pragma once

#include "multipoly.hpp"
#include "nat.hpp"

#include <stdexcept>
#include <vector>

namespace dhopf {

// Truncated Witt coordinates [w1, ..., wN]; index 0 holds w1.
using WittVector = std::vector<Rational>;

// r_n = sum over d | n of d w_d^(n/d).
template <class R>
std::vector<R> ghost(const std::vector<R> &w) {
    const std::size_t N = w.size();
    std::vector<R> r(N);
    for (std::size_t n = 1; n <= N; ++n) {
        R s(0L);
        for (auto d : divisors_u64(n)) s += R(Rational(static_cast<unsigned long>(d))) * ring_pow(w[d - 1], n / d);
        r[n - 1] = s;
    }
    return r;
}

template <class R>
std::vector<R> ghost_inverse(const std::vector<R> &r) {
    const std::size_t N = r.size();
    std::vector<R> w(N);
    for (std::size_t n = 1; n <= N; ++n) {
        R s = r[n - 1];
        for (auto d : divisors_u64(n))
            if (d != n) s -= R(Rational(static_cast<unsigned long>(d))) * ring_pow(w[d - 1], n / d);
        w[n - 1] = s * R(Rational(1) / Rational(static_cast<unsigned long>(n)));
    }
    return w;
}

template <class R>
std::vector<R> witt_add(const std::vector<R> &u, const std::vector<R> &v) {
    if (u.size() != v.size()) throw domain_error("witt_add: length mismatch");
    auto a = ghost(u), b = ghost(v);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return ghost_inverse(a);
}

template <class R>
std::vector<R> witt_mul(const std::vector<R> &u, const std::vector<R> &v) {
    if (u.size() != v.size()) throw domain_error("witt_mul: length mismatch");
    auto a = ghost(u), b = ghost(v);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] * b[i];
    return ghost_inverse(a);
}

inline std::vector<MultiPoly> witt_symbols(char family, std::size_t N) {
    std::vector<MultiPoly> w;
    for (std::size_t i = 1; i <= N; ++i) w.push_back(MultiPoly::var(family, static_cast<unsigned>(i)));
    return w;
}

struct UniversalPolys {
    std::vector<MultiPoly> F;
    std::vector<MultiPoly> G;
};

// Symbolic sum and product polynomials in w1..wN, v1..vN. Each F_i, G_i is
// checked to have integer coefficients and to involve only w_d, v_d with d | i.
inline UniversalPolys universal_polys(std::size_t N) {
    if (N == 0 || N > 8) throw domain_error("universal_polys: N must be in 1..8");
    const auto w = witt_symbols('w', N), v = witt_symbols('v', N);
    UniversalPolys out{witt_add(w, v), witt_mul(w, v)};
    for (std::size_t i = 1; i <= N; ++i) {
        for (const auto *p : {&out.F[i - 1], &out.G[i - 1]}) {
            if (!p->integral()) throw std::logic_error("universal_polys: non-integral coefficient at index " + std::to_string(i));
            for (const auto &var : p->variables())
                if (i % var.index != 0)
                    throw std::logic_error("universal_polys: variable " + var.str() + " outside divisor support");
        }
    }
    return out;
}

// lambda^n(m) = C(m, n), generalized to negative m.
inline Integer lambda_op(unsigned long n, const Integer &m) { return binomial(m, n); }

inline bool lambda_iter_identity(const Integer &x) {
    return lambda_op(2, lambda_op(2, x)) == lambda_op(3, x) * x - lambda_op(4, x);
}

// Stride-n subsampling [r_n, r_2n, ...].
template <class T>
std::vector<T> adams_op(std::size_t n, const std::vector<T> &seq) {
    if (n == 0) throw domain_error("adams_op: n must be >= 1");
    std::vector<T> out;
    for (std::size_t k = n; k <= seq.size(); k += n) out.push_back(seq[k - 1]);
    return out;
}

// Coefficients e1..eN of prod_{d=1..N} (1 - w_d (-t)^d).
template <class R>
std::vector<R> w_to_e(const std::vector<R> &w, std::size_t N) {
    if (w.size() < N) throw domain_error("w_to_e: fewer than N coordinates");
    std::vector<R> p(N + 1, R(0L));
    p[0] = R(1L);
    for (std::size_t d = 1; d <= N; ++d) {
        // Multiply by 1 + c t^d with c = -(-1)^d w_d.
        const R c = d % 2 ? w[d - 1] : R(-w[d - 1]);
        for (std::size_t k = N; k >= d; --k) p[k] += c * p[k - d];
    }
    return std::vector<R>(p.begin() + 1, p.end());
}

// Inverse of w_to_e, solved one degree at a time.
template <class R>
std::vector<R> e_to_w(const std::vector<R> &e, std::size_t N) {
    if (e.size() < N) throw domain_error("e_to_w: fewer than N coefficients");
    std::vector<R> w;
    std::vector<R> p(N + 1, R(0L));
    p[0] = R(1L);
    for (std::size_t n = 1; n <= N; ++n) {
        // e_n = [t^n] P_{n-1} - (-1)^n w_n.
        R wn = p[n] - e[n - 1];
        if (n % 2) wn = -wn;
        w.push_back(wn);
        const R c = n % 2 ? wn : R(-wn);
        for (std::size_t k = N; k >= n; --k) p[k] += c * p[k - n];
    }
    return w;
}

// Coefficients g_0, g_1, ... of d/dt log f for f with constant term 1.
template <class R>
std::vector<R> log_derivative_L(const std::vector<R> &f) {
    if (f.empty() || !(f[0] == R(1L))) throw domain_error("log_derivative_L: constant term must be 1");
    std::vector<R> g;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        R s = R(Rational(static_cast<unsigned long>(k + 1))) * f[k + 1];
        for (std::size_t j = 1; j <= k; ++j) s -= f[j] * g[k - j];
        g.push_back(s);
    }
    return g;
}

inline bool all_integral(const WittVector &w) {
    for (const auto &x : w)
        if (!is_integral(x)) return false;
    return true;
}

} // namespace dhopf
