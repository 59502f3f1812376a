#include "eqc/cocycle.hpp"

#include <algorithm>
#include <numeric>

#include "eqc/zmod.hpp"

namespace eqc {

bool Cocycle2::is_zero() const {
    for (const auto& row : table)
        for (int v : row)
            if (v != 0) return false;
    return true;
}

bool check_cocycle(const GroupPtr& G, int d, const std::vector<std::vector<int>>& table) {
    const int n = G->order();
    if (d < 1 || static_cast<int>(table.size()) != n) return false;
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) return false;
        for (int v : row)
            if (v < 0 || v >= d) return false;
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if ((table[g][h] + table[G->mul(g, h)][k]) % d !=
                    (table[h][k] + table[g][G->mul(h, k)]) % d)
                    return false;
    return true;
}

Cocycle2 make_cocycle(GroupPtr G, int d, std::vector<std::vector<int>> table) {
    if (!G) throw InvalidInput("null group");
    if (!check_cocycle(G, d, table)) throw InvalidInput("not a 2-cocycle");
    return Cocycle2{std::move(G), d, std::move(table)};
}

Cocycle2 zero_cocycle(GroupPtr G, int d) {
    if (!G) throw InvalidInput("null group");
    if (d < 1) throw InvalidInput("modulus must be positive");
    const int n = G->order();
    return Cocycle2{std::move(G), d, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
}

Cocycle2 coboundary(GroupPtr G, int d, const std::vector<int>& gamma) {
    if (!G) throw InvalidInput("null group");
    if (d < 1) throw InvalidInput("modulus must be positive");
    const int n = G->order();
    if (static_cast<int>(gamma.size()) != n) throw InvalidInput("cochain size mismatch");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            table[g][h] = (((gamma[g] + gamma[h] - gamma[G->mul(g, h)]) % d) + d) % d;
    return Cocycle2{G, d, std::move(table)};
}

std::optional<std::vector<int>> cohomologous(const Cocycle2& a, const Cocycle2& b) {
    if (a.G.get() != b.G.get()) throw InvalidInput("cocycles on different groups");
    if (a.d != b.d) throw InvalidInput("cocycles with different moduli");
    const int n = a.G->order();
    const int d = a.d;
    // Unknowns gamma(g); one equation per pair (g, h).
    std::vector<std::vector<Integer>> A;
    std::vector<Integer> rhs;
    A.reserve(static_cast<std::size_t>(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            std::vector<Integer> row(n, Integer(0));
            row[g] += 1;
            row[h] += 1;
            row[a.G->mul(g, h)] -= 1;
            A.push_back(std::move(row));
            rhs.emplace_back((a.table[g][h] - b.table[g][h] % d + d) % d);
        }
    auto sol = solve_mod(std::move(A), std::move(rhs), Integer(d));
    if (!sol) return std::nullopt;
    std::vector<int> gamma(n);
    for (int g = 0; g < n; ++g) gamma[g] = static_cast<int>(sol->at(g).get_si());
    // The solver is generic; re-check the cocycle identity directly.
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int db = (((gamma[g] + gamma[h] - gamma[a.G->mul(g, h)]) % d) + d) % d;
            if (db != (a.table[g][h] - b.table[g][h] % d + d) % d)
                throw Error("cohomologous: solver returned a non-solution");
        }
    return gamma;
}

Cocycle2 cocycle_combine(const Cocycle2& a, const Cocycle2& b, int ea, int eb) {
    if (a.G.get() != b.G.get()) throw InvalidInput("cocycles on different groups");
    const int D = std::lcm(a.d, b.d);
    const int sa = D / a.d;
    const int sb = D / b.d;
    const int n = a.G->order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            long v = static_cast<long>(ea) * sa * a.table[g][h] +
                     static_cast<long>(eb) * sb * b.table[g][h];
            table[g][h] = static_cast<int>(((v % D) + D) % D);
        }
    return Cocycle2{a.G, D, std::move(table)};
}

int class_order(const Cocycle2& a) {
    const Cocycle2 zero = zero_cocycle(a.G, a.d);
    for (int e = 1; e <= a.d; ++e) {
        Cocycle2 ea = cocycle_combine(a, zero, e, 0);
        if (cohomologous(ea, zero)) return e;
    }
    throw Error("class_order: no annihilating multiple up to d");
}

Cocycle2 restrict_cocycle(const Cocycle2& a, const SubgroupGroup& H) {
    const int k = static_cast<int>(H.to_parent.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) table[x][y] = a.table[H.to_parent[x]][H.to_parent[y]];
    return Cocycle2{H.group, a.d, std::move(table)};
}

CentralExtPtr central_extension(const Cocycle2& alpha) {
    return central_extension(alpha.G, alpha.d, alpha.table);
}

TwistedGroupAlgebra::BasisProduct TwistedGroupAlgebra::basis_product(int g, int h) const {
    return BasisProduct{alpha.G->mul(g, h), alpha.table[g][h]};
}

std::vector<Cyc> TwistedGroupAlgebra::basis(int g) const {
    std::vector<Cyc> v(dim());
    v[g] = Cyc(Rational(1));
    return v;
}

std::vector<Cyc> TwistedGroupAlgebra::unit() const {
    const int e = alpha.G->identity();
    std::vector<Cyc> v(dim());
    v[e] = Cyc::zeta(alpha.d, -alpha.table[e][e]);
    return v;
}

std::vector<Cyc> TwistedGroupAlgebra::multiply(const std::vector<Cyc>& x,
                                               const std::vector<Cyc>& y) const {
    if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
        throw InvalidInput("algebra element size mismatch");
    std::vector<Cyc> out(dim());
    for (int g = 0; g < dim(); ++g) {
        if (x[g].is_zero()) continue;
        for (int h = 0; h < dim(); ++h) {
            if (y[h].is_zero()) continue;
            BasisProduct p = basis_product(g, h);
            out[p.index] += x[g] * y[h] * Cyc::zeta(alpha.d, p.exp);
        }
    }
    return out;
}

TwistedGroupAlgebra twisted_group_algebra(Cocycle2 alpha) {
    if (!check_cocycle(alpha.G, alpha.d, alpha.table)) throw InvalidInput("not a 2-cocycle");
    TwistedGroupAlgebra A{std::move(alpha)};
    const int n = A.dim();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                auto gh_k = A.multiply(A.multiply(A.basis(g), A.basis(h)), A.basis(k));
                auto g_hk = A.multiply(A.basis(g), A.multiply(A.basis(h), A.basis(k)));
                if (gh_k != g_hk) throw Error("twisted algebra is not associative");
            }
    const std::vector<Cyc> u = A.unit();
    for (int g = 0; g < n; ++g) {
        if (A.multiply(u, A.basis(g)) != A.basis(g) || A.multiply(A.basis(g), u) != A.basis(g))
            throw Error("twisted algebra unit is not two-sided");
    }
    return A;
}

}  // namespace eqc
