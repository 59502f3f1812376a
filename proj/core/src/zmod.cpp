#include "eqc/zmod.hpp"

#include <algorithm>

namespace eqc {

namespace {

Integer mod_norm(const Integer& v, const Integer& d) {
    Integer r = v % d;
    if (r < 0) r += d;
    return r;
}

}  // namespace

std::optional<std::vector<Integer>> solve_mod(std::vector<std::vector<Integer>> A,
                                              std::vector<Integer> b, const Integer& d) {
    if (d < 1) throw InvalidInput("modulus must be positive");
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != cols) throw InvalidInput("ragged matrix");
    if (b.size() != rows) throw InvalidInput("rhs size mismatch");

    // Column operations are accumulated in V so that x = V z.
    std::vector<std::vector<Integer>> V(cols, std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(A[i], A[j]);
        std::swap(b[i], b[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(A[r][i], A[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(V[r][i], V[r][j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t c = 0; c < cols; ++c) A[dst][c] += q * A[src][c];
        b[dst] += q * b[src];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t r = 0; r < rows; ++r) A[r][dst] += q * A[r][src];
        for (std::size_t r = 0; r < cols; ++r) V[r][dst] += q * V[r][src];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: entry of smallest nonzero magnitude in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (A[i][j] == 0) continue;
                if (!found || abs(A[i][j]) < abs(A[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (A[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (A[i][t] != 0) {
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (A[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (A[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }

    // Residual rows must vanish mod d.
    for (std::size_t i = t; i < rows; ++i)
        if (mod_norm(b[i], d) != 0) return std::nullopt;

    // Diagonal solve: s_i z_i = b_i (mod d).
    std::vector<Integer> z(cols, Integer(0));
    for (std::size_t i = 0; i < t; ++i) {
        Integer s = mod_norm(A[i][i], d);
        Integer c = mod_norm(b[i], d);
        Integer g = gcd(s, d);
        if (g == 0) {
            if (c != 0) return std::nullopt;
            continue;
        }
        if (c % g != 0) return std::nullopt;
        Integer dd = d / g;
        Integer s1 = (s / g) % dd;
        Integer c1 = (c / g) % dd;
        if (dd == 1) {
            z[i] = 0;
            continue;
        }
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), s1.get_mpz_t(), dd.get_mpz_t()) == 0)
            return std::nullopt;
        z[i] = mod_norm(c1 * inv, dd);
    }

    std::vector<Integer> x(cols, Integer(0));
    for (std::size_t i = 0; i < cols; ++i) {
        Integer acc(0);
        for (std::size_t j = 0; j < cols; ++j) acc += V[i][j] * z[j];
        x[i] = mod_norm(acc, d);
    }
    return x;
}

}  // namespace eqc
