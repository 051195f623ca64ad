#pragma once

#include "formal_sum.hpp"
#include "nat.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dhopf {

// Integer partition stored as part size -> multiplicity. As a plethystic
// monomial it stands for (a^1)^(r1) (a^2)^(r2) ..., i.e. m_lambda.
class Partition {
public:
    Partition() = default;

    static Partition from_parts(const std::vector<unsigned> &parts) {
        Partition p;
        for (auto x : parts) {
            if (x == 0) throw domain_error("Partition: parts must be positive");
            ++p.mult_[x];
        }
        return p;
    }

    static Partition from_mult(const std::map<unsigned, unsigned> &m) {
        Partition p;
        for (auto [i, r] : m) {
            if (i == 0) throw domain_error("Partition: parts must be positive");
            if (r) p.mult_[i] = r;
        }
        return p;
    }

    // Comma-separated parts, e.g. "5,2,2"; "" or "0" gives the empty partition.
    static Partition parse(const std::string &s) {
        std::vector<unsigned> parts;
        if (s.empty() || s == "0" || s == "[]") return {};
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(tok, &used);
            } catch (const std::exception &) {
                throw domain_error("Partition: bad part '" + tok + "'");
            }
            if (used != tok.size() || v <= 0) throw domain_error("Partition: bad part '" + tok + "'");
            parts.push_back(static_cast<unsigned>(v));
        }
        return from_parts(parts);
    }

    const std::map<unsigned, unsigned> &mult() const { return mult_; }
    unsigned multiplicity(unsigned i) const {
        auto it = mult_.find(i);
        return it == mult_.end() ? 0 : it->second;
    }
    bool empty() const { return mult_.empty(); }

    unsigned weight() const {
        unsigned w = 0;
        for (auto [i, r] : mult_) w += i * r;
        return w;
    }

    // Number of parts (sum of multiplicities).
    unsigned length() const {
        unsigned l = 0;
        for (auto [i, r] : mult_) l += r;
        return l;
    }

    std::vector<unsigned> parts() const {
        std::vector<unsigned> v;
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) v.insert(v.end(), it->second, it->first);
        return v;
    }

    std::string str() const {
        std::string s = "[";
        bool first = true;
        for (auto x : parts()) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        return s + "]";
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend bool operator<(const Partition &a, const Partition &b) { return a.parts() < b.parts(); }

private:
    std::map<unsigned, unsigned> mult_;
};

using SymSum = FormalSum<Partition>;
using PartitionPair = std::pair<Partition, Partition>;
using PlethTensor = FormalSum<PartitionPair>;

inline std::string render(const SymSum &s, const std::string &symbol = "m") {
    return render_sum(s, [&](const Partition &p) { return symbol + p.str(); });
}

// Partitions of n in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxp) {
        if (left == 0) {
            out.push_back(Partition::from_parts(cur));
            return;
        }
        for (unsigned p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline bool dominates(const Partition &a, const Partition &b) {
    const auto pa = a.parts(), pb = b.parts();
    unsigned sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(pa.size(), pb.size()); ++i) {
        sa += i < pa.size() ? pa[i] : 0;
        sb += i < pb.size() ? pb[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

// (a^i)^(r) (a^i)^(s) = C(r+s, r) (a^i)^(r+s), blockwise.
inline SymSum div_product(const Partition &a, const Partition &b) {
    auto m = a.mult();
    Integer c = 1;
    for (auto [i, s] : b.mult()) {
        const unsigned r = m[i];
        c *= binomial(r + s, r);
        m[i] = r + s;
    }
    return SymSum(Partition::from_mult(m), Rational(c));
}

inline SymSum div_product(const SymSum &a, const SymSum &b) {
    SymSum out;
    for (const auto &[ka, ca] : a)
        for (const auto &[kb, cb] : b)
            for (const auto &[k, c] : div_product(ka, kb)) out.add(k, ca * cb * c);
    return out;
}

// All blockwise splits r_i = r_i' + r_i'', each with coefficient 1.
inline PlethTensor pleth_coproduct(const Partition &p) {
    std::vector<std::pair<unsigned, unsigned>> blocks(p.mult().begin(), p.mult().end());
    PlethTensor out;
    std::map<unsigned, unsigned> left, right;
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            out.add({Partition::from_mult(left), Partition::from_mult(right)}, 1);
            return;
        }
        const auto [i, r] = blocks[b];
        for (unsigned s = 0; s <= r; ++s) {
            left[i] = s;
            right[i] = r - s;
            rec(b + 1);
        }
        left.erase(i);
        right.erase(i);
    };
    rec(0);
    return out;
}

namespace detail {

inline Partition single_block(unsigned i, unsigned r) {
    return r ? Partition::from_mult({{i, r}}) : Partition();
}

} // namespace detail

// Laplace pairing: on generators <(a^i)^(r) | (a^j)^(s)> = [r = s] (a^(i+j))^(s),
// extended by expanding the left argument one block at a time.
inline SymSum laplace_pairing(const Partition &u, const Partition &v) {
    if (u.length() != v.length()) return {};
    if (u.empty()) return SymSum(Partition(), 1);
    auto ub = u.mult();
    const auto [i, r] = *ub.begin();
    ub.erase(ub.begin());
    const Partition rest = Partition::from_mult(ub);

    if (rest.empty()) {
        if (v.mult().size() == 1) {
            const auto [j, s] = *v.mult().begin();
            return r == s ? SymSum(detail::single_block(i + j, s), 1) : SymSum();
        }
        // Split the single left block against the first right block and the rest.
        auto vb = v.mult();
        const auto [j, s] = *vb.begin();
        vb.erase(vb.begin());
        const Partition vrest = Partition::from_mult(vb);
        if (s > r) return {};
        return div_product(laplace_pairing(detail::single_block(i, s), detail::single_block(j, s)),
                           laplace_pairing(detail::single_block(i, r - s), vrest));
    }

    SymSum out;
    const Partition head = detail::single_block(i, r);
    for (const auto &[vv, c] : pleth_coproduct(v)) {
        if (vv.first.length() != r) continue;
        SymSum a = laplace_pairing(head, vv.first);
        if (a.empty()) continue;
        SymSum b = laplace_pairing(rest, vv.second);
        if (b.empty()) continue;
        out += div_product(a, b) * c;
    }
    return out;
}

namespace detail {

class CircleCache {
public:
    bool find(const PartitionPair &k, SymSum &out) {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const PartitionPair &k, const SymSum &v) {
        std::unique_lock lock(mutex_);
        map_.emplace(k, v);
    }

private:
    std::shared_mutex mutex_;
    std::map<PartitionPair, SymSum> map_;
};

inline CircleCache &circle_cache() {
    static CircleCache c;
    return c;
}

} // namespace detail

// m_lambda o m_mu = sum <lambda_(1) | mu_(1)> lambda_(2) mu_(2).
inline SymSum circle_product(const Partition &a, const Partition &b) {
    SymSum out;
    if (detail::circle_cache().find({a, b}, out)) return out;
    const PlethTensor ca = pleth_coproduct(a), cb = pleth_coproduct(b);
    for (const auto &[ka, xa] : ca)
        for (const auto &[kb, xb] : cb) {
            if (ka.first.length() != kb.first.length()) continue;
            const SymSum pair = laplace_pairing(ka.first, kb.first);
            if (pair.empty()) continue;
            out += div_product(pair, div_product(ka.second, kb.second)) * (xa * xb);
        }
    detail::circle_cache().insert({a, b}, out);
    return out;
}

inline SymSum circle_product(const SymSum &a, const SymSum &b) {
    SymSum out;
    for (const auto &[ka, ca] : a)
        for (const auto &[kb, cb] : b) out += circle_product(ka, kb) * (ca * cb);
    return out;
}

// m_lambda * m_mu expanded as explicit polynomials in num_vars variables and
// read back in the monomial basis.
inline SymSum monomial_oracle(const Partition &a, const Partition &b, unsigned num_vars) {
    if (num_vars < a.weight() + b.weight())
        throw domain_error("monomial_oracle: need at least " + std::to_string(a.weight() + b.weight()) +
                           " variables");
    using Exps = std::vector<unsigned>;
    auto expand_m = [num_vars](const Partition &p) {
        Exps e = p.parts();
        e.resize(num_vars, 0);
        std::sort(e.begin(), e.end());
        std::vector<Exps> out;
        do out.push_back(e);
        while (std::next_permutation(e.begin(), e.end()));
        return out;
    };
    std::map<Exps, Integer> poly;
    const auto ea = expand_m(a), eb = expand_m(b);
    for (const auto &x : ea)
        for (const auto &y : eb) {
            Exps z(num_vars);
            for (unsigned i = 0; i < num_vars; ++i) z[i] = x[i] + y[i];
            if (std::is_sorted(z.rbegin(), z.rend())) poly[z] += 1;
        }
    SymSum out;
    for (const auto &[z, c] : poly) {
        Exps parts;
        for (auto x : z)
            if (x) parts.push_back(x);
        out.add(Partition::from_parts(parts), Rational(c));
    }
    return out;
}

// Number of semistandard tableaux of shape lambda and content mu, built as a
// chain of horizontal strips.
inline Integer kostka(const Partition &lambda, const Partition &mu) {
    if (lambda.weight() != mu.weight()) throw domain_error("kostka: weight mismatch");
    const auto shape = lambda.parts();
    const auto content = mu.parts();
    const std::size_t rows = shape.size();
    std::function<Integer(std::vector<unsigned> &, std::size_t)> rec = [&](std::vector<unsigned> &cur,
                                                                          std::size_t k) -> Integer {
        if (k == content.size()) return cur == shape ? 1 : 0;
        Integer total = 0;
        std::vector<unsigned> next = cur;
        std::function<void(std::size_t, unsigned)> strip = [&](std::size_t row, unsigned left) {
            if (row == rows) {
                if (left == 0) total += rec(next, k + 1);
                return;
            }
            const unsigned hi = std::min(shape[row], row == 0 ? shape[0] : cur[row - 1]);
            for (unsigned v = cur[row]; v <= hi && v - cur[row] <= left; ++v) {
                next[row] = v;
                strip(row + 1, left - (v - cur[row]));
            }
            next[row] = cur[row];
        };
        strip(0, content[k]);
        return total;
    };
    std::vector<unsigned> start(rows, 0);
    return rec(start, 0);
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix invert(RationalMatrix m) {
    const std::size_t n = m.size();
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) throw domain_error("invert: singular matrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        const Rational d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Rows and columns indexed by partitions_of(n).
inline RationalMatrix kostka_matrix(unsigned n) {
    const auto ps = partitions_of(n);
    RationalMatrix k(ps.size(), std::vector<Rational>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) k[i][j] = Rational(kostka(ps[i], ps[j]));
    return k;
}

inline SymSum schur_to_monomial(const Partition &lambda) {
    SymSum out;
    for (const auto &mu : partitions_of(lambda.weight())) out.add(mu, Rational(kostka(lambda, mu)));
    return out;
}

// Rewrites a homogeneous monomial-basis sum in the Schur basis through K^-1.
inline SymSum monomial_to_schur(const SymSum &s) {
    std::map<unsigned, std::vector<std::pair<Partition, Rational>>> by_weight;
    for (const auto &[p, c] : s) by_weight[p.weight()].emplace_back(p, c);
    SymSum out;
    for (const auto &[n, terms] : by_weight) {
        const auto ps = partitions_of(n);
        const RationalMatrix kinv = invert(kostka_matrix(n));
        std::vector<Rational> cm(ps.size());
        for (const auto &[p, c] : terms)
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (ps[j] == p) cm[j] = c;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            Rational v = 0;
            for (std::size_t j = 0; j < ps.size(); ++j) v += cm[j] * kinv[j][i];
            if (!is_integral(v)) throw std::logic_error("monomial_to_schur: non-integral coefficient");
            out.add(ps[i], v);
        }
    }
    return out;
}

// s_lambda s_mu = sum c^pi s_pi, computed as K R K^-1 through the circle product.
inline SymSum schur_product_lr(const Partition &lambda, const Partition &mu) {
    return monomial_to_schur(circle_product(schur_to_monomial(lambda), schur_to_monomial(mu)));
}

// h_n = sum of m_lambda over partitions of n.
inline SymSum eta_complete(unsigned n) {
    SymSum out;
    for (const auto &p : partitions_of(n)) out.add(p, 1);
    return out;
}

} // namespace dhopf
