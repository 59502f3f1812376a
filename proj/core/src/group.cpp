#include "eqc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace eqc {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw InvalidInput("permutation degree mismatch");
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

Perm parse_cycles(const std::string& text, int degree) {
    if (degree < 0) throw InvalidInput("negative permutation degree");
    Perm p = perm_identity(degree);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw InvalidInput("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidInput("expected digit in cycle notation: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v >= degree) throw InvalidInput("cycle entry out of range: " + text);
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw InvalidInput("unterminated cycle: " + text);
        ++i;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            if (used[from]) throw InvalidInput("cycles not disjoint: " + text);
            used[from] = true;
            p[from] = to;
        }
        skip_ws();
    }
    return p;
}

std::string cycles_str(const Perm& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        out << "(";
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out << " ";
            first = false;
            out << j;
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
        } while (j != i);
        out << ")";
    }
    if (!any) return "()";
    return out.str();
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, int full_check_bound)
    : n_(static_cast<int>(table.size())), table_(std::move(table)) {
    if (n_ == 0) throw InvalidInput("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_) throw InvalidInput("table is not square");
        for (int v : row)
            if (v < 0 || v >= n_) throw InvalidInput("table entry out of range");
    }
    // Latin square: every row and column is a permutation.
    for (int g = 0; g < n_; ++g) {
        std::vector<bool> row_seen(n_, false), col_seen(n_, false);
        for (int h = 0; h < n_; ++h) {
            if (row_seen[table_[g][h]]) throw InvalidInput("duplicate entry in table row");
            row_seen[table_[g][h]] = true;
            if (col_seen[table_[h][g]]) throw InvalidInput("duplicate entry in table column");
            col_seen[table_[h][g]] = true;
        }
    }
    e_ = -1;
    for (int g = 0; g < n_; ++g) {
        bool ok = true;
        for (int h = 0; h < n_ && ok; ++h)
            ok = table_[g][h] == h && table_[h][g] == h;
        if (ok) {
            e_ = g;
            break;
        }
    }
    if (e_ < 0) throw InvalidInput("table has no identity");
    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) {
            if (table_[g][h] == e_ && table_[h][g] == e_) {
                inv_[g] = h;
                break;
            }
        }
        if (inv_[g] < 0) throw InvalidInput("table element has no inverse");
    }
    if (n_ <= full_check_bound) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw InvalidInput("table is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n_ - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                throw InvalidInput("table is not associative");
        }
    }
}

int FiniteGroup::power(int g, long k) const {
    if (k < 0) return power(inv_[g], -k);
    int acc = e_;
    int base = g;
    while (k > 0) {
        if (k & 1) acc = table_[acc][base];
        base = table_[base][base];
        k >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int x = g;
    int k = 1;
    while (x != e_) {
        x = table_[x][g];
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const {
    long m = 1;
    for (int g = 0; g < n_; ++g) m = std::lcm(m, static_cast<long>(element_order(g)));
    return static_cast<int>(m);
}

bool FiniteGroup::is_abelian() const {
    for (int g = 0; g < n_; ++g)
        for (int h = g + 1; h < n_; ++h)
            if (table_[g][h] != table_[h][g]) return false;
    return true;
}

GeneratedGroup group_from_generators(const std::vector<Perm>& gens, int degree, int order_cap) {
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != degree) throw InvalidInput("generator degree mismatch");
        Perm sorted = g;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < degree; ++i)
            if (sorted[i] != i) throw InvalidInput("generator is not a permutation");
    }
    GeneratedGroup out;
    out.elements.push_back(perm_identity(degree));
    out.provenance.emplace_back(-1, -1);
    std::map<Perm, int> index;
    index.emplace(out.elements[0], 0);
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            Perm next = perm_compose(out.elements[head], gens[s]);
            if (index.count(next)) continue;
            if (static_cast<int>(out.elements.size()) >= order_cap)
                throw OrderCapExceeded("generator closure exceeds order cap");
            index.emplace(next, static_cast<int>(out.elements.size()));
            out.elements.push_back(std::move(next));
            out.provenance.emplace_back(static_cast<int>(head), static_cast<int>(s));
        }
    }
    const int n = static_cast<int>(out.elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = index.at(perm_compose(out.elements[a], out.elements[b]));
    out.group = std::make_shared<FiniteGroup>(std::move(table));
    for (const Perm& g : gens) out.generator_index.push_back(index.at(g));
    return out;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements) {
    if (!parent) throw InvalidInput("null parent group");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw InvalidInput("empty subgroup");
    Subgroup H{std::move(parent), std::move(elements)};
    for (int g : H.elements)
        if (g < 0 || g >= H.parent->order()) throw InvalidInput("subgroup element out of range");
    if (!H.contains(H.parent->identity())) throw InvalidInput("subgroup misses the identity");
    for (int g : H.elements) {
        if (!H.contains(H.parent->inverse(g))) throw InvalidInput("subgroup not inverse-closed");
        for (int h : H.elements)
            if (!H.contains(H.parent->mul(g, h))) throw InvalidInput("subgroup not closed");
    }
    return H;
}

SubgroupGroup subgroup_as_group(const Subgroup& H) {
    SubgroupGroup out;
    out.to_parent = H.elements;
    out.from_parent.assign(H.parent->order(), -1);
    for (std::size_t i = 0; i < H.elements.size(); ++i)
        out.from_parent[H.elements[i]] = static_cast<int>(i);
    const int k = static_cast<int>(H.elements.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            table[a][b] = out.from_parent[H.parent->mul(H.elements[a], H.elements[b])];
    out.group = std::make_shared<FiniteGroup>(std::move(table));
    return out;
}

ClassesPtr conjugacy_classes(GroupPtr G) {
    if (!G) throw InvalidInput("null group");
    auto out = std::make_shared<ConjClasses>();
    out->G = G;
    const int n = G->order();
    out->class_of.assign(n, -1);
    auto class_of_element = [&](int g) {
        std::vector<int> cls;
        std::vector<bool> in_cls(n, false);
        for (int x = 0; x < n; ++x) {
            int c = G->mul(G->mul(x, g), G->inverse(x));
            if (!in_cls[c]) {
                in_cls[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        return cls;
    };
    auto add_class = [&](std::vector<int> cls) {
        const int idx = static_cast<int>(out->classes.size());
        for (int c : cls) out->class_of[c] = idx;
        out->reps.push_back(cls.front());
        out->classes.push_back(std::move(cls));
    };
    add_class(class_of_element(G->identity()));
    for (int g = 0; g < n; ++g)
        if (out->class_of[g] < 0) add_class(class_of_element(g));
    for (int k = 0; k < out->count(); ++k)
        out->inverse_class.push_back(out->class_of[G->inverse(out->reps[k])]);
    return out;
}

std::vector<int> right_transversal(const GroupPtr& G, const Subgroup& H) {
    if (H.parent.get() != G.get()) throw InvalidInput("subgroup belongs to a different group");
    const int n = G->order();
    if (n % H.order() != 0) throw InvalidInput("subgroup order does not divide group order");
    std::vector<bool> covered(n, false);
    std::vector<int> reps;
    auto take = [&](int g) {
        reps.push_back(g);
        for (int h : H.elements) covered[G->mul(h, g)] = true;
    };
    take(G->identity());
    for (int g = 0; g < n; ++g)
        if (!covered[g]) take(g);
    if (static_cast<int>(reps.size()) * H.order() != n)
        throw InvalidInput("transversal does not tile the group");
    return reps;
}

int CentralExt::kernel_element(int j) const {
    const int e = base->identity();
    int t = ((j - alpha[e][e]) % d + d) % d;
    return encode(e, t);
}

CentralExtPtr central_extension(GroupPtr G, int d, const std::vector<std::vector<int>>& alpha) {
    if (!G) throw InvalidInput("null group");
    if (d < 1) throw InvalidInput("extension modulus must be positive");
    const int n = G->order();
    if (static_cast<int>(alpha.size()) != n) throw InvalidInput("cocycle table size mismatch");
    for (const auto& row : alpha) {
        if (static_cast<int>(row.size()) != n) throw InvalidInput("cocycle table size mismatch");
        for (int v : row)
            if (v < 0 || v >= d) throw InvalidInput("cocycle entry out of range");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if ((alpha[g][h] + alpha[G->mul(g, h)][k]) % d !=
                    (alpha[h][k] + alpha[g][G->mul(h, k)]) % d)
                    throw InvalidInput("cocycle condition fails");

    auto ext = std::make_shared<CentralExt>();
    ext->base = G;
    ext->d = d;
    ext->alpha = alpha;
    const int N = n * d;
    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    for (int g = 0; g < n; ++g)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < d; ++k)
                    table[g * d + j][h * d + k] =
                        G->mul(g, h) * d + (j + k + alpha[g][h]) % d;
    ext->bar = std::make_shared<FiniteGroup>(std::move(table));
    ext->center_gen = ext->kernel_element(1);

    // Kernel elements are central and center_gen has order exactly d.
    const int e = G->identity();
    for (int j = 0; j < d; ++j) {
        int z = ext->encode(e, j);
        for (int x = 0; x < N; ++x)
            if (ext->bar->mul(z, x) != ext->bar->mul(x, z))
                throw InvalidInput("extension kernel is not central");
    }
    if (ext->bar->element_order(ext->center_gen) != d)
        throw InvalidInput("center generator order mismatch");
    // Defining relation for the standard section.
    for (int g = 0; g < n; ++g) {
        if (ext->proj(ext->section(g)) != g) throw InvalidInput("section does not split proj");
        for (int h = 0; h < n; ++h) {
            int lhs = ext->bar->mul(ext->section(g), ext->section(h));
            int rhs = ext->bar->mul(ext->section(G->mul(g, h)),
                                    ext->bar->power(ext->center_gen, alpha[g][h]));
            if (lhs != rhs) throw InvalidInput("section relation fails");
        }
    }
    return ext;
}

}  // namespace eqc
