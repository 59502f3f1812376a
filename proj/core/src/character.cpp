#include "eqc/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqc {

long Character::dim() const {
    Rational q = values[0].as_rational();
    if (!is_integer(q)) throw InvalidInput("character dimension is not an integer");
    return static_cast<long>(to_integer(q).get_si());
}

namespace {

// Class layouts are deterministic per group, so characters computed from
// separate ConjClasses instances over the same group instance align.
bool same_layout(const Character& a, const Character& b) {
    return a.cls.get() == b.cls.get() || a.cls->G.get() == b.cls->G.get();
}

void require_same_classes(const Character& a, const Character& b) {
    if (!same_layout(a, b)) throw InvalidInput("characters on different class data");
}

}  // namespace

bool operator==(const Character& a, const Character& b) {
    if (!same_layout(a, b)) return false;
    return a.values == b.values;
}

namespace {

std::optional<int> weight_sum(const std::optional<int>& a, const std::optional<int>& b, int sb) {
    if (a && b) return *a + sb * *b;
    return std::nullopt;
}

}  // namespace

Character trivial_character(ClassesPtr cls) {
    Character chi;
    chi.cls = std::move(cls);
    chi.values.assign(chi.cls->count(), Cyc(Rational(1)));
    chi.weight = 0;
    return chi;
}

Character char_mul(const Character& a, const Character& b) {
    require_same_classes(a, b);
    Character out;
    out.cls = a.cls;
    out.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
    out.weight = weight_sum(a.weight, b.weight, +1);
    return out;
}

Character char_dual(const Character& a) {
    Character out;
    out.cls = a.cls;
    out.values.reserve(a.values.size());
    for (const Cyc& v : a.values) out.values.push_back(v.conj());
    if (a.weight) out.weight = -*a.weight;
    return out;
}

Character char_hom(const Character& a, const Character& b) { return char_mul(char_dual(a), b); }

Character char_add(const Character& a, const Character& b) {
    require_same_classes(a, b);
    Character out;
    out.cls = a.cls;
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] + b.values[i]);
    if (a.weight && b.weight && *a.weight == *b.weight) out.weight = a.weight;
    return out;
}

Character char_scale(const Character& a, long k) {
    Character out = a;
    for (Cyc& v : out.values) v *= Rational(k);
    return out;
}

Cyc char_inner(const Character& a, const Character& b) {
    require_same_classes(a, b);
    const ConjClasses& cls = *a.cls;
    Cyc acc;
    for (int i = 0; i < cls.count(); ++i) {
        Cyc term = a.values[i] * b.values[cls.inverse_class[i]];
        term *= Rational(static_cast<long>(cls.classes[i].size()));
        acc += term;
    }
    acc *= frac(1, cls.G->order());
    return acc;
}

long invariant_dim(const Character& chi) {
    Cyc ip = char_inner(chi, trivial_character(chi.cls));
    Rational q = ip.as_rational();
    if (!is_integer(q) || q < 0)
        throw InvalidInput("invariant multiplicity is not a nonnegative integer: " + to_string(q));
    return static_cast<long>(to_integer(q).get_si());
}

Character sym_power(const Character& chi, int k) {
    if (k < 0) throw InvalidInput("negative symmetric power");
    const ConjClasses& cls = *chi.cls;
    // Power sums p_i on class representatives: p_i(g) = chi(g^i).
    std::vector<std::vector<Cyc>> psum(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) {
        psum[i].reserve(cls.count());
        for (int c = 0; c < cls.count(); ++c) {
            int gi = cls.G->power(cls.reps[c], i);
            psum[i].push_back(chi.values[cls.class_of[gi]]);
        }
    }
    // h_0 = 1, h_j = (1/j) sum_{i=1..j} p_i h_{j-i}.
    std::vector<std::vector<Cyc>> h(static_cast<std::size_t>(k) + 1,
                                    std::vector<Cyc>(cls.count()));
    for (int c = 0; c < cls.count(); ++c) h[0][c] = Cyc(Rational(1));
    for (int j = 1; j <= k; ++j) {
        for (int c = 0; c < cls.count(); ++c) {
            Cyc acc;
            for (int i = 1; i <= j; ++i) acc += psum[i][c] * h[j - i][c];
            acc *= frac(1, j);
            h[j][c] = acc;
        }
    }
    Character out;
    out.cls = chi.cls;
    out.values = std::move(h[k]);
    if (chi.weight) out.weight = *chi.weight * k;
    return out;
}

namespace {

// Dense linear algebra over F_p with p < 2^31.
struct Fp {
    long p;
    long add(long a, long b) const { return (a + b) % p; }
    long sub(long a, long b) const { return ((a - b) % p + p) % p; }
    long mul(long a, long b) const { return (a * b) % p; }
    long pow(long a, long e) const {
        long acc = 1 % p, base = ((a % p) + p) % p;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    long inv(long a) const { return pow(a, p - 2); }
};

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column of each row.
std::vector<int> rref(Mat& m, const Fp& F) {
    std::vector<int> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        long scale = F.inv(m[rank][col]);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = F.mul(m[rank][j], scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            long f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[rank][j]));
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

// Kernel basis of a square matrix, rows of the result, in RREF.
Mat kernel_basis(Mat m, const Fp& F) {
    const std::size_t n = m.size();
    std::vector<int> pivots = rref(m, F);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat ker;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.sub(0, m[r][free_col]);
        ker.push_back(std::move(v));
    }
    rref(ker, F);
    return ker;
}

bool is_prime_long(long v) {
    if (v < 2) return false;
    for (long f = 2; f * f <= v; ++f)
        if (v % f == 0) return false;
    return true;
}

long smallest_primitive_root(long p) {
    std::vector<long> prime_factors;
    long q = p - 1;
    for (long f = 2; f * f <= q; ++f) {
        if (q % f) continue;
        prime_factors.push_back(f);
        while (q % f == 0) q /= f;
    }
    if (q > 1) prime_factors.push_back(q);
    Fp F{p};
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long f : prime_factors)
            if (F.pow(g, (p - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

}  // namespace

int dixon_prime(const FiniteGroup& G, int than) {
    const int m = G.exponent();
    const double bound = 2.0 * std::sqrt(static_cast<double>(G.order()));
    long p = ((than / m) + 1) * static_cast<long>(m) + 1;
    while (p <= than || static_cast<double>(p) <= bound || !is_prime_long(p) ||
           (p - 1) % m != 0) {
        p += m;
        if (p > 1000000) throw Error("no Dixon prime found in range");
    }
    return static_cast<int>(p);
}

CharacterTable character_table(GroupPtr G, int prime) {
    ClassesPtr cls = conjugacy_classes(G);
    const int n = G->order();
    const int r = cls->count();
    const int m = G->exponent();
    long p;
    if (prime == 0) {
        p = dixon_prime(*G);
    } else {
        p = prime;
        if (!is_prime_long(p) || (p - 1) % m != 0 ||
            static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(n)))
            throw InvalidInput("prime fails the Dixon conditions");
    }
    const Fp F{p};

    // Class algebra structure constants: c_i c_j = sum_k N[i][j][k] c_k.
    std::vector<Mat> M(r, Mat(r, Vec(r, 0)));
    for (int k = 0; k < r; ++k) {
        const int z = cls->reps[k];
        for (int i = 0; i < r; ++i)
            for (int x : cls->classes[i]) {
                int y = G->mul(G->inverse(x), z);
                int j = cls->class_of[y];
                // (M_i)[row k][col j] accumulates N_{i j k}.
                M[i][k][j] += 1;
            }
    }
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < r; ++j) M[i][k][j] %= p;

    // Split the class-function space into common eigenspaces of all M_i.
    std::vector<Mat> spaces;
    {
        Mat full(r, Vec(r, 0));
        for (int i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        std::vector<Mat> next;
        for (Mat& W : spaces) {
            const std::size_t dim = W.size();
            if (dim == 1) {
                next.push_back(std::move(W));
                continue;
            }
            // Restriction A of M_i to W: rows of W are RREF, so coordinates
            // of a vector in W are read off at the pivot columns.
            std::vector<int> piv;
            for (const Vec& w : W) {
                int c = 0;
                while (w[c] == 0) ++c;
                piv.push_back(c);
            }
            Mat A(dim, Vec(dim, 0));
            for (std::size_t t = 0; t < dim; ++t) {
                Vec u(r, 0);
                for (int row = 0; row < r; ++row) {
                    long acc = 0;
                    for (int colv = 0; colv < r; ++colv)
                        acc = F.add(acc, F.mul(M[i][row][colv], W[t][colv]));
                    u[row] = acc;
                }
                for (std::size_t s = 0; s < dim; ++s) A[s][t] = u[piv[s]];
                // Invariance check: u must equal sum_s A[s][t] W[s].
                for (int c = 0; c < r; ++c) {
                    long acc = 0;
                    for (std::size_t s = 0; s < dim; ++s)
                        acc = F.add(acc, F.mul(A[s][t], W[s][c]));
                    if (acc != u[c]) throw Error("class matrix does not preserve eigenspace");
                }
            }
            bool split = false;
            for (long lam = 0; lam < p; ++lam) {
                Mat B = A;
                for (std::size_t t = 0; t < dim; ++t) B[t][t] = F.sub(B[t][t], lam);
                Mat ker = kernel_basis(std::move(B), F);
                if (ker.empty()) continue;
                split = true;
                Mat sub;
                for (const Vec& kv : ker) {
                    Vec v(r, 0);
                    for (std::size_t t = 0; t < dim; ++t)
                        for (int c = 0; c < r; ++c)
                            v[c] = F.add(v[c], F.mul(kv[t], W[t][c]));
                    sub.push_back(std::move(v));
                }
                rref(sub, F);
                next.push_back(std::move(sub));
            }
            if (!split) throw Error("class matrix produced no eigenvalues");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != r)
        throw Error("eigenspace splitting did not separate all characters");

    // Eigenvalue vectors -> mod-p character values.
    std::vector<Vec> chi_p;
    for (const Mat& W : spaces) {
        const Vec& v = W[0];
        int pv = 0;
        while (v[pv] == 0) ++pv;
        Vec omega(r, 0);
        for (int i = 0; i < r; ++i) {
            long acc = 0;
            for (int c = 0; c < r; ++c) acc = F.add(acc, F.mul(M[i][pv][c], v[c]));
            omega[i] = F.mul(acc, F.inv(v[pv]));
            // Confirm v is an eigenvector of M_i, not only at the pivot row.
            for (int row = 0; row < r; ++row) {
                long lhs = 0;
                for (int c = 0; c < r; ++c) lhs = F.add(lhs, F.mul(M[i][row][c], v[c]));
                if (lhs != F.mul(omega[i], v[row]))
                    throw Error("common eigenvector check failed");
            }
        }
        long s = 0;
        for (int i = 0; i < r; ++i) {
            long t = F.mul(omega[i], omega[cls->inverse_class[i]]);
            s = F.add(s, F.mul(t, F.inv(static_cast<long>(cls->classes[i].size()) % p)));
        }
        if (s == 0) throw Error("degree reconstruction failed");
        long d2 = F.mul(n % p, F.inv(s));
        long deg = -1;
        for (long c = 1; 2 * c < p; ++c)
            if (F.mul(c, c) == d2) {
                deg = c;
                break;
            }
        if (deg < 0) throw Error("degree is not a small square root");
        Vec values(r, 0);
        for (int i = 0; i < r; ++i)
            values[i] =
                F.mul(deg, F.mul(omega[i], F.inv(static_cast<long>(cls->classes[i].size()) % p)));
        chi_p.push_back(std::move(values));
    }

    // Lift to Q(zeta_m) by the discrete-log correspondence zeta_m <-> z.
    const long z = F.pow(smallest_primitive_root(p), (p - 1) / m);
    const long inv_m = F.inv(m % p);
    // Power-class map: pow_class[i][l] = class of reps[i]^l.
    std::vector<std::vector<int>> pow_class(r, std::vector<int>(m));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < m; ++l) pow_class[i][l] = cls->class_of[G->power(cls->reps[i], l)];

    CharacterTable table;
    table.cls = cls;
    table.prime = static_cast<int>(p);
    for (const Vec& cp : chi_p) {
        Character chi;
        chi.cls = cls;
        for (int i = 0; i < r; ++i) {
            std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
            for (int k = 0; k < m; ++k) {
                long acc = 0;
                for (int l = 0; l < m; ++l) {
                    long zkl = F.pow(z, (static_cast<long>(m) - k) * l % m);
                    acc = F.add(acc, F.mul(cp[pow_class[i][l]], zkl));
                }
                long mult = F.mul(acc, inv_m);
                raw[static_cast<std::size_t>(k)] = Rational(mult);
            }
            chi.values.push_back(Cyc(m, std::move(raw)));
        }
        table.rows.push_back(std::move(chi));
    }

    std::sort(table.rows.begin(), table.rows.end(), [](const Character& a, const Character& b) {
        const long da = a.dim(), db = b.dim();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            int c = Cyc::compare(a.values[i], b.values[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    // Exact verification: orthonormal rows, squares summing to |G|.
    long sum_sq = 0;
    for (const Character& chi : table.rows) {
        long dg = chi.dim();
        if (dg <= 0) throw Error("character degree must be positive");
        sum_sq += dg * dg;
    }
    if (sum_sq != n) throw Error("degree squares do not sum to the group order");
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            Cyc ip = char_inner(table.rows[a], table.rows[b]);
            if (ip != Cyc(Rational(a == b ? 1 : 0)))
                throw Error("character rows are not orthonormal");
        }
    return table;
}

bool has_pure_weight(const CentralExt& ext, const Character& chi, int i) {
    if (chi.cls->G.get() != ext.bar.get())
        throw InvalidInput("character is not on the extension group");
    const ConjClasses& cls = *chi.cls;
    const Cyc zi = Cyc::zeta(ext.d, i);
    for (int c = 0; c < cls.count(); ++c) {
        int zx = ext.bar->mul(ext.center_gen, cls.reps[c]);
        if (chi.values[cls.class_of[zx]] != zi * chi.values[c]) return false;
    }
    return true;
}

int weight_of(const CentralExt& ext, const Character& chi) {
    for (int i = 0; i < ext.d; ++i)
        if (has_pure_weight(ext, chi, i)) return i;
    throw NoPureWeight("character has no single central weight");
}

std::vector<WeightedIrrep> projective_irreps(const CentralExtPtr& ext, int i) {
    const int w = ((i % ext->d) + ext->d) % ext->d;
    CharacterTable table = character_table(ext->bar);
    std::vector<WeightedIrrep> out;
    for (Character& chi : table.rows) {
        if (!has_pure_weight(*ext, chi, w)) continue;
        chi.weight = w;
        out.push_back(WeightedIrrep{ext, std::move(chi), w});
    }
    return out;
}

std::vector<WeightedIrrep> projective_irreps(const Cocycle2& alpha, int i) {
    return projective_irreps(central_extension(alpha), i);
}

RegularProjectiveChar regular_projective_character(const Cocycle2& alpha) {
    RegularProjectiveChar out;
    out.ext = central_extension(alpha);
    out.components = projective_irreps(out.ext, 1);
    if (out.components.empty()) throw Error("no weight-1 component in the regular character");
    ClassesPtr cls = out.components[0].chi.cls;

    Character sum;
    sum.cls = cls;
    sum.values.assign(cls->count(), Cyc());
    for (const WeightedIrrep& w : out.components) {
        long d = w.chi.dim();
        out.multiplicities.push_back(d);
        sum = char_add(sum, char_scale(w.chi, d));
    }
    sum.weight = ((1 % out.ext->d) + out.ext->d) % out.ext->d;

    // Independent route: project the regular character of barG onto weight 1.
    // chi_reg vanishes off the identity, so the projection is supported on
    // the central kernel.
    const CentralExt& ext = *out.ext;
    const int N = ext.bar->order();
    Character proj;
    proj.cls = cls;
    proj.values.assign(cls->count(), Cyc());
    for (int j = 0; j < ext.d; ++j) {
        // Class of kernel_element(-j): contribution (1/d) zeta^{-j} |barG|.
        int x = ext.kernel_element(((-j) % ext.d + ext.d) % ext.d);
        int c = cls->class_of[x];
        proj.values[c] += Cyc::zeta(ext.d, -j) * frac(N, ext.d);
    }
    if (!(proj == sum)) throw Error("regular character weight-1 projection mismatch");

    out.chi = std::move(sum);
    return out;
}

}  // namespace eqc
