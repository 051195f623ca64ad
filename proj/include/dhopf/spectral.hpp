#pragma once

#include "additive.hpp"
#include "dirichlet.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace dhopf {

using IntMatrix = std::vector<std::vector<Integer>>;

// Truncated multiplication table: one row per value, one column per pair
// (x, y), entry 1 iff x op y equals the row value.
struct TableMatrix {
    std::vector<std::uint64_t> rows;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cols;
    IntMatrix m;
};

namespace detail {

inline TableMatrix table_from(std::vector<std::uint64_t> rows, const std::vector<TensorSum> &cops) {
    TableMatrix t;
    t.rows = std::move(rows);
    for (const auto &c : cops)
        for (const auto &kv : c) t.cols.emplace_back(kv.first[0].to_u64(), kv.first[1].to_u64());
    t.m.assign(t.rows.size(), std::vector<Integer>(t.cols.size()));
    std::size_t col = 0;
    for (std::size_t r = 0; r < cops.size(); ++r)
        for (std::size_t k = 0; k < cops[r].size(); ++k) t.m[r][col++] = 1;
    return t;
}

} // namespace detail

// Rows 0..N, columns (i, j) with i + j <= N.
inline TableMatrix table_matrix_add(std::uint64_t N) {
    std::vector<std::uint64_t> rows;
    std::vector<TensorSum> cops;
    for (std::uint64_t n = 0; n <= N; ++n) {
        rows.push_back(n);
        cops.push_back(coproduct_add(Nat(n)));
    }
    return detail::table_from(std::move(rows), cops);
}

// Rows 1..N, columns (d, n/d) for n <= N.
inline TableMatrix table_matrix_mul(std::uint64_t N) {
    if (N == 0) throw domain_error("table_matrix_mul: N must be >= 1");
    std::vector<std::uint64_t> rows;
    std::vector<TensorSum> cops;
    for (std::uint64_t n = 1; n <= N; ++n) {
        rows.push_back(n);
        cops.push_back(coproduct_mul(Nat(n)));
    }
    return detail::table_from(std::move(rows), cops);
}

inline IntMatrix transpose(const IntMatrix &a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), std::vector<Integer>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline IntMatrix matmul(const IntMatrix &a, const IntMatrix &b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IntMatrix c(n, std::vector<Integer>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

// A = m m^T, indexed by table rows.
inline IntMatrix gram_A(const TableMatrix &t) { return matmul(t.m, transpose(t.m)); }

// B = m^T m, indexed by table columns.
inline IntMatrix gram_B(const TableMatrix &t) { return matmul(transpose(t.m), t.m); }

// Sum of leg sums over the additive coproduct of n.
inline Integer operator_identity_add(const Nat &n) {
    Integer s = 0;
    for (const auto &kv : coproduct_add(n)) s += (kv.first[0] + kv.first[1]).value();
    return s;
}

// Sum of leg products over the divisor coproduct of n.
inline Integer operator_identity_mul(const Nat &n) {
    Integer s = 0;
    for (const auto &kv : coproduct_mul(n)) s += (kv.first[0] * kv.first[1]).value();
    return s;
}

// Characteristic polynomial det(x I - A), coefficients from x^0 upward,
// via reduction to Hessenberg form over the rationals.
inline std::vector<Rational> charpoly(const IntMatrix &a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = Rational(a[i][j]);

    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && sgn(h[piv][c]) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(h[piv], h[c + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][c + 1]);
        }
        for (std::size_t j = c + 2; j < n; ++j) {
            if (sgn(h[j][c]) == 0) continue;
            const Rational u = h[j][c] / h[c + 1][c];
            for (std::size_t k = 0; k < n; ++k) h[j][k] -= u * h[c + 1][k];
            for (std::size_t k = 0; k < n; ++k) h[k][c + 1] += u * h[k][j];
        }
    }

    std::vector<std::vector<Rational>> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Rational> q(m + 1);
        for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
            q[k + 1] += p[m - 1][k];
            q[k] -= h[m - 1][m - 1] * p[m - 1][k];
        }
        Rational t = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t *= h[i][i - 1];
            if (sgn(t) == 0) break;
            const Rational f = h[i - 1][m - 1] * t;
            if (sgn(f) == 0) continue;
            for (std::size_t k = 0; k < p[i - 1].size(); ++k) q[k] -= f * p[i - 1][k];
        }
        p[m] = std::move(q);
    }
    return p[n];
}

// m m^T and m^T m share their nonzero spectrum iff
// charpoly(m^T m) = x^(cols - rows) charpoly(m m^T).
inline bool nonzero_spectra_agree(const TableMatrix &t) {
    const auto pa = charpoly(gram_A(t));
    const auto pb = charpoly(gram_B(t));
    const std::size_t shift = t.cols.size() - t.rows.size();
    if (pb.size() != pa.size() + shift) return false;
    for (std::size_t k = 0; k < pb.size(); ++k) {
        const Rational expect = k < shift ? Rational(0) : pa[k - shift];
        if (pb[k] != expect) return false;
    }
    return true;
}

inline void write_csv(std::ostream &os, const IntMatrix &m) {
    for (const auto &row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        os << '\n';
    }
}

} // namespace dhopf
