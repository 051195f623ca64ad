#pragma once

#include "cochain.hpp"
#include "formal_sum.hpp"

#include <vector>

namespace dhopf {

// Sum over r = 0..n of r (+) (n - r), unit coefficients.
inline TensorSum coproduct_add(const Nat &n) {
    TensorSum out;
    for (Nat r; r <= n; r = r + Nat(1)) out.add({r, monus(n, r)}, 1);
    return out;
}

// coproduct_add without the two unit terms 0 (+) n and n (+) 0.
inline TensorSum coproduct_add_proper(const Nat &n) {
    TensorSum out;
    for (Nat r(1); r < n; r = r + Nat(1)) out.add({r, monus(n, r)}, 1);
    return out;
}

// Binomially weighted coproduct: sum of C(n, r) r (+) (n - r).
inline TensorSum coproduct_add_unrenorm(const Nat &n) {
    const auto m = n.to_u64();
    TensorSum out;
    for (std::uint64_t r = 0; r <= m; ++r) out.add({Nat(r), Nat(m - r)}, Rational(binomial(m, r)));
    return out;
}

inline Rational counit_add(const Nat &n) { return n.is_zero() ? 1 : 0; }

inline Integer antipode_add(const Nat &n) { return -n.value(); }

enum class CodomainProduct { scalar, additive };

// Additive convolution at n. `scalar` multiplies the two values, `additive`
// composes them in the additive monoid of the codomain.
inline Rational convolve_add(const Cochain &f, const Cochain &g, const Nat &n,
                             CodomainProduct prod = CodomainProduct::scalar) {
    Rational s = 0;
    for (Nat r; r <= n; r = r + Nat(1)) {
        if (prod == CodomainProduct::scalar)
            s += f(r) * g(monus(n, r));
        else
            s += f(r) + g(monus(n, r));
    }
    return s;
}

// Inverse with respect to convolution into an additive codomain.
inline Cochain cochain_inverse_add(const Cochain &phi) {
    return Cochain(phi.name() + "^-1", [phi](const Nat &n) { return Rational(-phi(n)); });
}

inline Rational coboundary2_add(const Cochain &phi, const Nat &n, const Nat &m) {
    return phi(n) + phi(m) - phi(n + m);
}

inline bool is_additive_cocycle(const Cochain &phi, std::uint64_t N) {
    for (std::uint64_t n = 0; n <= N; ++n)
        for (std::uint64_t m = 0; m <= N; ++m)
            if (coboundary2_add(phi, Nat(n), Nat(m)) != 0) return false;
    return true;
}

// Branching by b: n - b when n >= b, projected to 0 otherwise.
inline Nat branch_subtract(const Nat &b, const Nat &n) { return monus(n, b); }

// Contraction of n by the primitive element 1.
inline Nat derive_add(const Nat &n) {
    if (n.is_zero()) throw domain_error("derive_add: argument must be >= 1");
    return monus(n, Nat(1));
}

class PowerSeries {
public:
    enum class Basis { ordinary, divided };

    PowerSeries() = default;
    PowerSeries(std::vector<Rational> coeffs, Basis basis = Basis::ordinary)
        : coeffs_(std::move(coeffs)), basis_(basis) {}

    // Monomial t^k (or t^(k) in the divided basis) truncated at length len.
    static PowerSeries monomial(std::size_t k, std::size_t len, Basis basis = Basis::ordinary) {
        std::vector<Rational> c(len);
        if (k < len) c[k] = 1;
        return {std::move(c), basis};
    }

    const std::vector<Rational> &coeffs() const { return coeffs_; }
    Basis basis() const { return basis_; }
    std::size_t length() const { return coeffs_.size(); }
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    // Rescaling f_n -> f_n / n! identifies the divided basis with the ordinary one.
    PowerSeries to_ordinary() const {
        if (basis_ == Basis::ordinary) return *this;
        std::vector<Rational> c = coeffs_;
        for (std::size_t n = 0; n < c.size(); ++n) c[n] /= Rational(factorial(n));
        return {std::move(c), Basis::ordinary};
    }
    PowerSeries to_divided() const {
        if (basis_ == Basis::divided) return *this;
        std::vector<Rational> c = coeffs_;
        for (std::size_t n = 0; n < c.size(); ++n) c[n] *= Rational(factorial(n));
        return {std::move(c), Basis::divided};
    }

    friend bool operator==(const PowerSeries &a, const PowerSeries &b) {
        if (a.basis_ != b.basis_) return false;
        const std::size_t n = std::max(a.length(), b.length());
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

private:
    std::vector<Rational> coeffs_;
    Basis basis_ = Basis::ordinary;
};

inline PowerSeries series_multiply(const PowerSeries &f, const PowerSeries &g) {
    if (f.basis() != g.basis()) throw domain_error("series_multiply: basis mismatch");
    const std::size_t len = std::min(f.length(), g.length());
    const bool divided = f.basis() == PowerSeries::Basis::divided;
    std::vector<Rational> h(len);
    for (std::size_t n = 0; n < len; ++n)
        for (std::size_t r = 0; r <= n; ++r) {
            if (sgn(f.coeffs()[r]) == 0) continue;
            Rational t = f.coeffs()[r] * g.coeffs()[n - r];
            if (divided) t *= Rational(binomial(n, r));
            h[n] += t;
        }
    return {std::move(h), f.basis()};
}

inline PowerSeries series_add(const PowerSeries &f, const PowerSeries &g) {
    if (f.basis() != g.basis()) throw domain_error("series_add: basis mismatch");
    const std::size_t len = std::min(f.length(), g.length());
    std::vector<Rational> h(len);
    for (std::size_t n = 0; n < len; ++n) h[n] = f.coeffs()[n] + g.coeffs()[n];
    return {std::move(h), f.basis()};
}

} // namespace dhopf
