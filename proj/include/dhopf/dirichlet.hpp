#pragma once

#include "additive.hpp"
#include "cochain.hpp"
#include "formal_sum.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dhopf {

// Sum over d | n of d (x) n/d, unit coefficients.
inline TensorSum coproduct_mul(const Nat &n) {
    detail::require_positive(n, "coproduct_mul");
    TensorSum out;
    for (const auto &d : divisors(n)) out.add({d, exact_quotient(n, d)}, 1);
    return out;
}

inline TensorSum coproduct_mul_proper(const Nat &n) {
    detail::require_positive(n, "coproduct_mul_proper");
    TensorSum out;
    for (const auto &d : divisors(n))
        if (d != Nat(1) && d != n) out.add({d, exact_quotient(n, d)}, 1);
    return out;
}

inline Rational counit_mul(const Nat &n) {
    detail::require_positive(n, "counit_mul");
    return n == Nat(1) ? 1 : 0;
}

inline Rational moebius(const Nat &n) {
    detail::require_positive(n, "moebius");
    return cochains::moebius()(n);
}

inline Rational dirichlet_convolve(const Cochain &f, const Cochain &g, const Nat &n) {
    detail::require_positive(n, "dirichlet_convolve");
    Rational s = 0;
    if (n.fits_u64()) {
        const auto m = n.to_u64();
        for (auto d : divisors_u64(m)) s += f.at(d) * g.at(m / d);
        return s;
    }
    for (const auto &d : divisors(n)) s += f(d) * g(exact_quotient(n, d));
    return s;
}

// Convolution inverse on 1..N, solved from (f * g)(n) = [n = 1] by a sieve.
inline Cochain dirichlet_inverse(const Cochain &f, std::uint64_t N) {
    const Rational f1 = f.at(1);
    if (sgn(f1) == 0) throw domain_error("dirichlet_inverse: f(1) = 0, not invertible");
    std::vector<Rational> fv(N + 1), acc(N + 1), g(N + 1);
    for (std::uint64_t n = 2; n <= N; ++n) fv[n] = f.at(n);
    const Rational inv1 = 1 / f1;
    for (std::uint64_t k = 1; k <= N; ++k) {
        g[k] = k == 1 ? inv1 : Rational(-acc[k] * inv1);
        if (sgn(g[k]) == 0) continue;
        for (std::uint64_t d = 2; d * k <= N; ++d)
            if (sgn(fv[d]) != 0) acc[d * k] += fv[d] * g[k];
    }
    g.erase(g.begin());
    return Cochain::from_table(f.name() + "^-1", std::move(g), 1, f.flags().multiplicative
                                                                      ? Cochain::Flags{true, false}
                                                                      : Cochain::Flags{});
}

namespace detail {

template <class Step>
Rational solve_on_divisors(const Nat &n, Step step) {
    std::map<Nat, Rational> memo;
    for (const auto &d : divisors(n)) memo[d] = step(d, memo);
    return memo.at(n);
}

} // namespace detail

// S(n) = n mu(n). The closed form is checked against the recursion
// sum_{d|n} S(d) (n/d) = [n = 1] solved on the divisor lattice of n.
inline Rational antipode_mul(const Nat &n) {
    detail::require_positive(n, "antipode_mul");
    const Rational closed = Rational(n.value()) * moebius(n);
    const Rational rec = detail::solve_on_divisors(n, [](const Nat &m, const std::map<Nat, Rational> &s) {
        if (m == Nat(1)) return Rational(1);
        Rational acc = 0;
        for (const auto &d : divisors(m))
            if (d != m) acc += s.at(d) * Rational(exact_quotient(m, d).value());
        return Rational(-acc);
    });
    if (closed != rec) throw std::logic_error("antipode_mul: closed form and recursion disagree at " + n.str());
    return closed;
}

// Antipode values 1..N from the recursion alone.
inline std::vector<Rational> antipode_mul_table(std::uint64_t N) {
    std::vector<Rational> s(N + 1);
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (n == 1) {
            s[1] = 1;
            continue;
        }
        Rational acc = 0;
        for (auto d : divisors_u64(n))
            if (d != n) acc += s[d] * (n / d);
        s[n] = -acc;
    }
    return s;
}

inline bool is_multiplicative(const Cochain &f, std::uint64_t N) {
    for (std::uint64_t n = 1; n <= N; ++n)
        for (std::uint64_t m = n; m <= N; ++m)
            if (std::gcd(n, m) == 1 && f.at(n * m) != f.at(n) * f.at(m)) return false;
    return true;
}

inline bool is_completely_multiplicative(const Cochain &f, std::uint64_t N) {
    for (std::uint64_t n = 1; n <= N; ++n)
        for (std::uint64_t m = n; m <= N; ++m)
            if (f.at(n * m) != f.at(n) * f.at(m)) return false;
    return true;
}

// Values c(n, m) of a map on pairs, stored for 1 <= n, m <= N.
class TwoCochain {
public:
    explicit TwoCochain(std::uint64_t N = 0) : N_(N), v_(N * N) {}

    std::uint64_t size() const { return N_; }
    const Rational &operator()(std::uint64_t n, std::uint64_t m) const { return v_[(n - 1) * N_ + (m - 1)]; }
    Rational &operator()(std::uint64_t n, std::uint64_t m) { return v_[(n - 1) * N_ + (m - 1)]; }

    static TwoCochain counit(std::uint64_t N) {
        TwoCochain c(N);
        if (N) c(1, 1) = 1;
        return c;
    }

    friend bool operator==(const TwoCochain &, const TwoCochain &) = default;

private:
    std::uint64_t N_;
    std::vector<Rational> v_;
};

// (c * c')(n, m) = sum over d | n, l | m of c(d, l) c'(n/d, m/l).
inline TwoCochain convolve2(const TwoCochain &a, const TwoCochain &b) {
    const auto N = std::min(a.size(), b.size());
    TwoCochain out(N);
    for (std::uint64_t n = 1; n <= N; ++n)
        for (std::uint64_t m = 1; m <= N; ++m) {
            Rational s = 0;
            for (auto d : divisors_u64(n))
                for (auto l : divisors_u64(m)) s += a(d, l) * b(n / d, m / l);
            out(n, m) = s;
        }
    return out;
}

inline TwoCochain inverse2(const TwoCochain &a) {
    const auto N = a.size();
    if (N == 0) return a;
    if (sgn(a(1, 1)) == 0) throw domain_error("inverse2: c(1,1) = 0, not invertible");
    const Rational inv = 1 / a(1, 1);
    TwoCochain g(N);
    // Pairs are visited so that every proper divisor pair precedes (n, m).
    for (std::uint64_t n = 1; n <= N; ++n)
        for (std::uint64_t m = 1; m <= N; ++m) {
            if (n == 1 && m == 1) {
                g(1, 1) = inv;
                continue;
            }
            Rational s = 0;
            for (auto d : divisors_u64(n))
                for (auto l : divisors_u64(m))
                    if (d != 1 || l != 1) s += a(d, l) * g(n / d, m / l);
            g(n, m) = -s * inv;
        }
    return g;
}

// (d2 phi)(n, m) = sum over d | n, l | m of phi(d) phi(l) phi^-1((n/d)(m/l)),
// given phi^-1 tabulated at least up to n m.
inline Rational coboundary2_mul(const Cochain &phi, const Cochain &phi_inv, const Nat &n, const Nat &m) {
    detail::require_positive(n, "coboundary2_mul");
    detail::require_positive(m, "coboundary2_mul");
    const auto a = n.to_u64(), b = m.to_u64();
    Rational s = 0;
    for (auto d : divisors_u64(a)) {
        const Rational pd = phi.at(d);
        if (sgn(pd) == 0) continue;
        for (auto l : divisors_u64(b)) s += pd * phi.at(l) * phi_inv.at((a / d) * (b / l));
    }
    return s;
}

inline Rational coboundary2_mul(const Cochain &phi, const Nat &n, const Nat &m) {
    return coboundary2_mul(phi, dirichlet_inverse(phi, (n * m).to_u64()), n, m);
}

inline TwoCochain coboundary2_table(const Cochain &phi, std::uint64_t N) {
    const Cochain tab = phi.tabulate(1, N);
    const Cochain inv = dirichlet_inverse(tab, N * N);
    TwoCochain out(N);
    for (std::uint64_t n = 1; n <= N; ++n)
        for (std::uint64_t m = 1; m <= N; ++m) out(n, m) = coboundary2_mul(tab, inv, Nat(n), Nat(m));
    return out;
}

// Division branching: n / b when b | n, projected to 0 otherwise.
inline Nat branch_divide(const Nat &b, const Nat &n) {
    detail::require_positive(b, "branch_divide");
    detail::require_positive(n, "branch_divide");
    return divides(b, n) ? exact_quotient(n, b) : Nat();
}

// Multiplicative extension of p -> p (x) 1 + 1 (x) p over the prime factors of n.
inline TensorSum coproduct_mul_unrenorm(const Nat &n) {
    detail::require_positive(n, "coproduct_mul_unrenorm");
    TensorSum out({Nat(1), Nat(1)});
    const auto times = [](const Nat &a, const Nat &b) { return a * b; };
    for (const auto &[p, r] : factorize(n)) {
        TensorSum prim;
        prim.add({p, Nat(1)}, 1).add({Nat(1), p}, 1);
        for (unsigned k = 0; k < r; ++k) out = legwise_product(out, prim, times);
    }
    return out;
}

// Exponentiates an additive coproduct of each exponent r_i into p_i-powers and
// multiplies the resulting tensors over all primes of n.
inline TensorSum exponentiated_split(const Nat &n, bool binomial_weights) {
    detail::require_positive(n, "exponentiated_split");
    TensorSum out({Nat(1), Nat(1)});
    const auto times = [](const Nat &a, const Nat &b) { return a * b; };
    for (const auto &[p, r] : factorize(n)) {
        const TensorSum split = binomial_weights ? coproduct_add_unrenorm(Nat(r)) : coproduct_add(Nat(r));
        const TensorSum lifted = split.map_keys([&p](const Legs &k) {
            return Legs{expand({{p, static_cast<unsigned>(k[0].to_u64())}}),
                        expand({{p, static_cast<unsigned>(k[1].to_u64())}})};
        });
        out = legwise_product(out, lifted, times);
    }
    return out;
}

inline bool check_exponentiation_relation(const Nat &n) {
    detail::require_positive(n, "check_exponentiation_relation");
    return coproduct_mul(n) == exponentiated_split(n, false) &&
           coproduct_mul_unrenorm(n) == exponentiated_split(n, true);
}

// r-leg expansion of the (r-1)-fold iterated unrenormalized coproduct of p^r,
// with multinomial weights.
inline TensorSum coproduct_mul_unrenorm_iterated(const Nat &p, unsigned r) {
    if (!is_prime(p)) throw domain_error("coproduct_mul_unrenorm_iterated: " + p.str() + " is not prime");
    if (r == 0) throw domain_error("coproduct_mul_unrenorm_iterated: r must be >= 1");
    TensorSum out;
    std::vector<unsigned> s(r, 0);
    // Enumerate compositions s_1 + ... + s_r = r with s_i >= 0.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
        if (i + 1 == r) {
            s[i] = left;
            Integer coeff = factorial(r);
            Legs k;
            for (unsigned j = 0; j < r; ++j) {
                coeff /= factorial(s[j]);
                k.push_back(expand({{p, s[j]}}));
            }
            out.add(k, Rational(coeff));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            s[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, r);
    return out;
}

// (n | m) = prod r_i! when n = m = prod p_i^r_i, else 0.
inline Rational pairing_unrenorm(const Nat &n, const Nat &m) {
    detail::require_positive(n, "pairing_unrenorm");
    detail::require_positive(m, "pairing_unrenorm");
    if (n != m) return 0;
    Integer v = 1;
    for (const auto &pp : factorize(n)) v *= factorial(pp.r);
    return Rational(v);
}

// Same pairing through Laplace expansion: peel a prime p off m and pair the
// coproduct legs of n against p and m/p.
inline Rational pairing_unrenorm_laplace(const Nat &n, const Nat &m) {
    detail::require_positive(n, "pairing_unrenorm_laplace");
    detail::require_positive(m, "pairing_unrenorm_laplace");
    if (m == Nat(1)) return n == Nat(1) ? 1 : 0;
    const Nat p = factorize(m).front().p;
    const Nat rest = exact_quotient(m, p);
    Rational s = 0;
    for (const auto &[k, c] : coproduct_mul_unrenorm(n))
        if (k[0] == p) s += c * pairing_unrenorm_laplace(k[1], rest);
    return s;
}

// S(n) = (-1)^Omega(n) n, checked against the recursion through the
// unrenormalized coproduct.
inline Rational antipode_unrenorm(const Nat &n) {
    detail::require_positive(n, "antipode_unrenorm");
    const Rational closed = Rational(n.value()) * (omega_grade(n) % 2 ? -1 : 1);
    const Rational rec = detail::solve_on_divisors(n, [](const Nat &m, const std::map<Nat, Rational> &s) {
        if (m == Nat(1)) return Rational(1);
        Rational acc = 0;
        for (const auto &[k, c] : coproduct_mul_unrenorm(m))
            if (k[0] != m) acc += c * s.at(k[0]) * Rational(k[1].value());
        return Rational(-acc);
    });
    if (closed != rec)
        throw std::logic_error("antipode_unrenorm: closed form and recursion disagree at " + n.str());
    return closed;
}

inline std::vector<Rational> antipode_unrenorm_table(std::uint64_t N) {
    std::vector<Rational> s(N + 1);
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (n == 1) {
            s[1] = 1;
            continue;
        }
        Rational acc = 0;
        for (const auto &[k, c] : coproduct_mul_unrenorm(Nat(n)))
            if (k[0] != Nat(n)) acc += c * s[k[0].to_u64()] * Rational(k[1].value());
        s[n] = -acc;
    }
    return s;
}

using NatSum = FormalSum<Nat>;

// Derivation by the prime p: (delta_p (x) id) applied to the unrenormalized
// coproduct, giving r (n / p) where r is the exponent of p in n.
inline NatSum branch_derive(const Nat &p, const Nat &n) {
    if (!is_prime(p)) throw domain_error("branch_derive: " + p.str() + " is not prime");
    detail::require_positive(n, "branch_derive");
    NatSum out;
    for (const auto &[k, c] : coproduct_mul_unrenorm(n))
        if (k[0] == p) out.add(k[1], c);
    return out;
}

// n# m# = c (n m)#, c = prod (r_i + s_i)! / (r_i! s_i!).
inline std::pair<Rational, Nat> sharp_multiply(const Nat &n, const Nat &m) {
    detail::require_positive(n, "sharp_multiply");
    detail::require_positive(m, "sharp_multiply");
    std::map<Nat, std::pair<unsigned, unsigned>> ex;
    for (const auto &pp : factorize(n)) ex[pp.p].first = pp.r;
    for (const auto &pp : factorize(m)) ex[pp.p].second = pp.r;
    Integer c = 1;
    for (const auto &[p, rs] : ex) c *= binomial(rs.first + rs.second, rs.first);
    return {Rational(c), n * m};
}

struct CompatibilityWitness {
    TensorSum lhs;
    TensorSum rhs;
    bool equal;
};

// Coproduct of the product 2 * 2 against the product of the coproducts.
inline CompatibilityWitness bialgebra_counterexample() {
    const auto times = [](const Nat &a, const Nat &b) { return a * b; };
    TensorSum lhs = coproduct_mul(Nat(4));
    TensorSum rhs = legwise_product(coproduct_mul(Nat(2)), coproduct_mul(Nat(2)), times);
    const bool eq = lhs == rhs;
    return {std::move(lhs), std::move(rhs), eq};
}

// Coproduct of n + m against the product of the coproducts of n and m.
inline CompatibilityWitness additive_compatibility(const Nat &n, const Nat &m) {
    const auto plus = [](const Nat &a, const Nat &b) { return a + b; };
    TensorSum lhs = coproduct_add(n + m);
    TensorSum rhs = legwise_product(coproduct_add(n), coproduct_add(m), plus);
    const bool eq = lhs == rhs;
    return {std::move(lhs), std::move(rhs), eq};
}

} // namespace dhopf
