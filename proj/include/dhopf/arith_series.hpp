#pragma once

#include "additive.hpp"
#include "nat.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace dhopf {

// Truncated Dirichlet generating function sum f_n n^-s, coefficients 1..N.
class DirichletSeries {
public:
    DirichletSeries() = default;
    explicit DirichletSeries(std::size_t N) : c_(N) {}
    explicit DirichletSeries(std::vector<Rational> c) : c_(std::move(c)) {}

    static DirichletSeries unit(std::size_t N) {
        DirichletSeries s(N);
        if (N) s[1] = 1;
        return s;
    }

    std::size_t depth() const { return c_.size(); }
    // 1-based access.
    const Rational &operator[](std::size_t n) const { return c_.at(n - 1); }
    Rational &operator[](std::size_t n) { return c_.at(n - 1); }
    const std::vector<Rational> &coeffs() const { return c_; }

    // Coefficient-wise equality on the shared truncation.
    friend bool operator==(const DirichletSeries &a, const DirichletSeries &b) {
        const std::size_t n = std::min(a.depth(), b.depth());
        for (std::size_t i = 0; i < n; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

private:
    std::vector<Rational> c_;
};

inline DirichletSeries series_mul(const DirichletSeries &f, const DirichletSeries &g) {
    const std::size_t N = std::min(f.depth(), g.depth());
    DirichletSeries h(N);
    for (std::size_t d = 1; d <= N; ++d) {
        const Rational &fd = f[d];
        if (sgn(fd) == 0) continue;
        for (std::size_t k = 1; d * k <= N; ++k) {
            const Rational &gk = g[k];
            if (sgn(gk) != 0) h[d * k] += fd * gk;
        }
    }
    return h;
}

inline DirichletSeries series_add(const DirichletSeries &f, const DirichletSeries &g) {
    const std::size_t N = std::min(f.depth(), g.depth());
    DirichletSeries h(N);
    for (std::size_t n = 1; n <= N; ++n) h[n] = f[n] + g[n];
    return h;
}

inline DirichletSeries series_scale(const DirichletSeries &f, const Rational &s) {
    DirichletSeries h = f;
    for (std::size_t n = 1; n <= h.depth(); ++n) h[n] *= s;
    return h;
}

inline DirichletSeries hadamard(const DirichletSeries &f, const DirichletSeries &g) {
    const std::size_t N = std::min(f.depth(), g.depth());
    DirichletSeries h(N);
    for (std::size_t n = 1; n <= N; ++n) h[n] = f[n] * g[n];
    return h;
}

inline DirichletSeries series_inverse(const DirichletSeries &f) {
    const std::size_t N = f.depth();
    if (N == 0 || sgn(f[1]) == 0) throw domain_error("series_inverse: leading coefficient is 0, not invertible");
    const Rational inv1 = 1 / f[1];
    DirichletSeries g(N), acc(N);
    for (std::size_t k = 1; k <= N; ++k) {
        g[k] = k == 1 ? inv1 : Rational(-acc[k] * inv1);
        if (sgn(g[k]) == 0) continue;
        for (std::size_t d = 2; d * k <= N; ++d)
            if (sgn(f[d]) != 0) acc[d * k] += f[d] * g[k];
    }
    return g;
}

inline const std::vector<std::string> &series_names() {
    static const std::vector<std::string> v{"zeta",   "zeta_squared", "ordered_factorizations",
                                            "lambda", "moebius",      "identity_shift"};
    return v;
}

inline DirichletSeries named_series(const std::string &name, std::size_t N) {
    if (N == 0) throw domain_error("named_series: depth must be >= 1");
    DirichletSeries s(N);
    if (name == "zeta") {
        for (std::size_t n = 1; n <= N; ++n) s[n] = 1;
    } else if (name == "zeta_squared") {
        const auto z = named_series("zeta", N);
        return series_mul(z, z);
    } else if (name == "ordered_factorizations") {
        DirichletSeries two_minus_zeta(N);
        two_minus_zeta[1] = 1;
        for (std::size_t n = 2; n <= N; ++n) two_minus_zeta[n] = -1;
        return series_inverse(two_minus_zeta);
    } else if (name == "lambda") {
        for (std::size_t n = 1; n <= N; ++n) s[n] = n % 2;
    } else if (name == "moebius") {
        for (std::size_t n = 1; n <= N; ++n) s[n] = moebius_u64(n);
    } else if (name == "identity_shift") {
        for (std::size_t n = 1; n <= N; ++n) s[n] = static_cast<long>(n) * moebius_u64(n);
    } else if (name == "identity") {
        for (std::size_t n = 1; n <= N; ++n) s[n] = static_cast<unsigned long>(n);
    } else {
        throw domain_error("named_series: unknown series '" + name + "'");
    }
    return s;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t P) {
    std::vector<bool> comp(P + 1);
    std::vector<std::uint64_t> ps;
    for (std::uint64_t i = 2; i <= P; ++i) {
        if (comp[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = i * i; j <= P; j += i) comp[j] = true;
    }
    return ps;
}

// Expansion of prod_{p <= P} (1 - p^-s) truncated at depth N.
inline DirichletSeries euler_product_inverse_zeta(std::uint64_t P, std::size_t N) {
    if (N == 0) throw domain_error("euler_product_inverse_zeta: depth must be >= 1");
    const auto ps = primes_up_to(std::max<std::uint64_t>(P, N));
    for (auto p : ps)
        if (p <= N && p > P)
            throw domain_error("euler_product_inverse_zeta: prime bound " + std::to_string(P) +
                               " misses prime " + std::to_string(p) + " <= " + std::to_string(N));
    DirichletSeries s = DirichletSeries::unit(N);
    for (auto p : ps) {
        if (p > P) break;
        DirichletSeries f = DirichletSeries::unit(N);
        if (p <= N) f[p] = -1;
        s = series_mul(s, f);
    }
    return s;
}

struct LSeries {
    DirichletSeries series;
    bool completely_multiplicative;
};

// Series with coefficient chi(n) = period[(n - 1) mod k].
inline LSeries l_series(const std::vector<Rational> &period, std::size_t N) {
    if (period.empty()) throw domain_error("l_series: empty character period");
    DirichletSeries s(N);
    for (std::size_t n = 1; n <= N; ++n) s[n] = period[(n - 1) % period.size()];
    bool cm = true;
    for (std::size_t n = 1; n <= N && cm; ++n)
        for (std::size_t m = 1; n * m <= N; ++m)
            if (s[n * m] != s[n] * s[m]) {
                cm = false;
                break;
            }
    return {std::move(s), cm};
}

// Coefficients indexed 1..N+k: 1 at n + k for 1 <= n <= N, 0 elsewhere.
inline std::vector<Rational> hurwitz_coeffs(std::size_t k, std::size_t N) {
    std::vector<Rational> c(N + k);
    for (std::size_t n = 1; n <= N; ++n) c[n + k - 1] = 1;
    return c;
}

// sum_{n <= N} mu_n x^n / (1 - x^n), truncated after x^N.
inline PowerSeries lambert_moebius(std::size_t N) {
    std::vector<Rational> c(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        const int mu = moebius_u64(n);
        if (mu == 0) continue;
        for (std::size_t k = n; k <= N; k += n) c[k] += mu;
    }
    return PowerSeries(std::move(c));
}

inline bool lambert_moebius_check(std::size_t N) {
    return lambert_moebius(N) == PowerSeries::monomial(1, N + 1);
}

// Mixed Dirichlet/ordinary generating function sum a_{n,m} z^m / n^s with
// n = 1..n_max and m = 0..m_max.
class OdgTable {
public:
    OdgTable(std::size_t n_max, std::size_t m_max) : n_max_(n_max), m_max_(m_max), a_(n_max * (m_max + 1)) {}

    std::size_t n_max() const { return n_max_; }
    std::size_t m_max() const { return m_max_; }
    const Rational &operator()(std::size_t n, std::size_t m) const { return a_.at((n - 1) * (m_max_ + 1) + m); }
    Rational &operator()(std::size_t n, std::size_t m) { return a_.at((n - 1) * (m_max_ + 1) + m); }

    // Product of a Dirichlet series in s and an ordinary series in z.
    static OdgTable outer(const DirichletSeries &f, const PowerSeries &g) {
        OdgTable t(f.depth(), g.length() ? g.length() - 1 : 0);
        for (std::size_t n = 1; n <= t.n_max_; ++n)
            for (std::size_t m = 0; m <= t.m_max_; ++m) t(n, m) = f[n] * g[m];
        return t;
    }

private:
    std::size_t n_max_, m_max_;
    std::vector<Rational> a_;
};

// Coefficients of the polylogarithms sum z^n / n^s: a_{n,m} = [n = m].
inline OdgTable polylog_coeffs(std::size_t n_max, std::size_t m_max) {
    OdgTable t(n_max, m_max);
    for (std::size_t n = 1; n <= n_max && n <= m_max; ++n) t(n, n) = 1;
    return t;
}

inline void write_csv(std::ostream &os, const DirichletSeries &s) {
    os << "n,coefficient\n";
    for (std::size_t n = 1; n <= s.depth(); ++n) os << n << ',' << s[n].get_str() << '\n';
}

} // namespace dhopf
