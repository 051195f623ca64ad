#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dhopf {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an argument lies outside the domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Nonnegative arbitrary-precision integer.
class Nat {
public:
    Nat() = default;

    template <std::unsigned_integral T>
    Nat(T v) : v_(static_cast<unsigned long>(v)) {
        static_assert(sizeof(T) <= sizeof(unsigned long));
    }

    template <std::signed_integral T>
    Nat(T v) : v_(static_cast<long>(v)) {
        if (v < 0) throw domain_error("Nat: negative value " + std::to_string(v));
    }

    explicit Nat(const Integer &v) : v_(v) {
        if (sgn(v_) < 0) throw domain_error("Nat: negative value " + v_.get_str());
    }

    explicit Nat(const std::string &s) {
        if (s.empty() || v_.set_str(s, 10) != 0) throw domain_error("Nat: not an integer: '" + s + "'");
        if (sgn(v_) < 0) throw domain_error("Nat: negative value " + s);
    }

    const Integer &value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool fits_u64() const { return v_.fits_ulong_p(); }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw domain_error("Nat: value too large for a machine word");
        return v_.get_ui();
    }
    std::string str() const { return v_.get_str(); }

    friend Nat operator+(const Nat &a, const Nat &b) { return Nat(Integer(a.v_ + b.v_), raw_tag{}); }
    friend Nat operator*(const Nat &a, const Nat &b) { return Nat(Integer(a.v_ * b.v_), raw_tag{}); }
    // Truncated subtraction, stays inside the monoid.
    friend Nat monus(const Nat &a, const Nat &b) {
        return a.v_ >= b.v_ ? Nat(Integer(a.v_ - b.v_), raw_tag{}) : Nat();
    }
    friend bool divides(const Nat &d, const Nat &n) {
        if (d.is_zero()) return n.is_zero();
        return mpz_divisible_p(n.v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
    }
    friend Nat exact_quotient(const Nat &n, const Nat &d) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), n.v_.get_mpz_t(), d.v_.get_mpz_t());
        return Nat(q, raw_tag{});
    }

    friend bool operator==(const Nat &a, const Nat &b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Nat &a, const Nat &b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream &operator<<(std::ostream &os, const Nat &n) { return os << n.v_; }

private:
    struct raw_tag {};
    Nat(Integer v, raw_tag) : v_(std::move(v)) {}
    Integer v_;
};

struct PrimePower {
    Nat p;
    unsigned r;
    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

using Factorization = std::vector<PrimePower>;

namespace detail {

using SmallFactorization = std::vector<std::pair<std::uint64_t, unsigned>>;

inline SmallFactorization trial_divide(std::uint64_t n) {
    SmallFactorization out;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        unsigned r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        out.emplace_back(p, r);
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

class FactorCache {
public:
    SmallFactorization get(std::uint64_t n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(n); it != map_.end()) return it->second;
        }
        auto f = trial_divide(n);
        std::unique_lock lock(mutex_);
        if (map_.size() < max_entries) map_.emplace(n, f);
        return f;
    }

private:
    static constexpr std::size_t max_entries = 1u << 21;
    std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, SmallFactorization> map_;
};

inline FactorCache &factor_cache() {
    static FactorCache cache;
    return cache;
}

inline void require_positive(std::uint64_t n, const char *what) {
    if (n == 0) throw domain_error(std::string(what) + ": argument must be >= 1");
}

inline void require_positive(const Nat &n, const char *what) {
    if (n.is_zero()) throw domain_error(std::string(what) + ": argument must be >= 1");
}

} // namespace detail

// Prime-exponent pairs of n >= 1 as machine words, memoized.
inline detail::SmallFactorization factorize_u64(std::uint64_t n) {
    detail::require_positive(n, "factorize");
    if (n < 4) return n == 1 ? detail::SmallFactorization{} : detail::SmallFactorization{{n, 1u}};
    return detail::factor_cache().get(n);
}

inline Factorization factorize(const Nat &n) {
    detail::require_positive(n, "factorize");
    Factorization out;
    if (n.fits_u64()) {
        for (auto [p, r] : factorize_u64(n.to_u64())) out.push_back({Nat(p), r});
        return out;
    }
    Integer m = n.value();
    auto strip = [&](const Integer &p) {
        unsigned r = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++r;
        }
        if (r) out.push_back({Nat(p), r});
    };
    strip(2);
    for (Integer p = 3; p * p <= m; p += 2) strip(p);
    if (m > 1) out.push_back({Nat(m), 1u});
    return out;
}

inline Nat expand(const Factorization &f) {
    Integer v = 1;
    for (const auto &[p, r] : f) {
        Integer pr;
        mpz_pow_ui(pr.get_mpz_t(), p.value().get_mpz_t(), r);
        v *= pr;
    }
    return Nat(v);
}

inline bool is_prime(const Nat &n) {
    if (n < Nat(2)) return false;
    const auto f = factorize(n);
    return f.size() == 1 && f[0].r == 1;
}

inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (auto [p, r] : factorize_u64(n)) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= r; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<Nat> divisors(const Nat &n) {
    detail::require_positive(n, "divisors");
    std::vector<Nat> ds{Nat(1)};
    for (const auto &[p, r] : factorize(n)) {
        const std::size_t base = ds.size();
        Nat pk(1);
        for (unsigned k = 1; k <= r; ++k) {
            pk = pk * p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Omega(n): number of prime factors counted with multiplicity.
inline unsigned omega_grade(const Nat &n) {
    unsigned s = 0;
    for (const auto &pp : factorize(n)) s += pp.r;
    return s;
}

inline unsigned divisor_count_u64(std::uint64_t n) {
    unsigned d = 1;
    for (auto [p, r] : factorize_u64(n)) d *= r + 1;
    return d;
}

inline int moebius_u64(std::uint64_t n) {
    int s = 1;
    for (auto [p, r] : factorize_u64(n)) {
        if (r > 1) return 0;
        s = -s;
    }
    return s;
}

inline Nat gcd(const Nat &n, const Nat &m) { return Nat(Integer(::gcd(n.value(), m.value()))); }

inline Integer binomial(const Integer &n, unsigned long k) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer ipow(const Integer &b, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

inline Rational rpow(const Rational &b, unsigned long e) {
    Rational out(ipow(b.get_num(), e), ipow(b.get_den(), e));
    return out;
}

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

inline std::string to_string(const Rational &q) { return q.get_str(); }

} // namespace dhopf

template <>
struct std::hash<dhopf::Nat> {
    std::size_t operator()(const dhopf::Nat &n) const noexcept {
        return n.fits_u64() ? std::hash<std::uint64_t>{}(n.to_u64())
                            : std::hash<std::string>{}(n.str());
    }
};
