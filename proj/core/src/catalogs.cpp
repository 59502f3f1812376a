#include "eqc/catalogs.hpp"

#include <algorithm>

#include "eqc/error.hpp"

namespace eqc {

std::vector<std::vector<int>> young_diagrams(int rows, int cols, int size) {
    if (rows < 0 || cols < 0 || size < 0) throw InvalidInput("young_diagrams: negative input");
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == rows) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    rec(rec, size, cols);
    // The recursion emits larger first parts first, which is descending
    // lexicographic order already.
    return out;
}

namespace {

Character scaled_trivial(const ClassesPtr& cls, long value, int weight) {
    Character chi = trivial_character(cls);
    for (Cyc& v : chi.values) v = v * Rational(value);
    chi.weight = weight;
    return chi;
}

CentralExtPtr one_element_extension() {
    auto G = std::make_shared<const FiniteGroup>(std::vector<std::vector<int>>{{0}});
    return central_extension(G, 1, {{0}});
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_slong_p()) throw InvalidInput("binomial overflow");
    return r.get_si();
}

}  // namespace

ExcCollection catalog_projective(int n, const CentralExtPtr& ext, const Character& v_char) {
    if (n < 2) throw InvalidInput("projective space needs dimension at least 2");
    if (!ext) throw InvalidInput("projective catalog needs an extension");
    if (!v_char.cls || v_char.cls->G.get() != ext->bar.get())
        throw InvalidInput("representation character lives on the wrong group");
    if (v_char.dim() != n)
        throw InvalidInput("representation character has dimension " +
                           std::to_string(v_char.dim()) + ", expected " + std::to_string(n));
    const int want = 1 % ext->d;
    if (weight_of(*ext, v_char) != want)
        throw InvalidInput("representation character must have central weight 1");

    ExcCollection C;
    C.name = "projective:" + std::to_string(n);
    C.hom_ext = ext;
    if (n == 3) C.lat = PicLattice{0};

    for (int k = 0; k < n; ++k) {
        ExcObject obj;
        obj.label = k == 0 ? "O" : "O(" + std::to_string(k) + ")";
        obj.block = k;
        obj.weight = -k;
        if (C.lat) {
            PicVec D = C.lat->zero();
            D[0] = k;
            obj.kclass = line_bundle_class(*C.lat, D);
        }
        C.objects.push_back(std::move(obj));
    }

    Character vdual = char_dual(v_char);
    vdual.weight = -want;
    Character triv = trivial_character(v_char.cls);
    triv.weight = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                C.homchars[{i, j}] = {{0, triv}};
            } else if (i < j) {
                // sym_power scales the weight tag: -(j-i), matching the gap
                // between the tags of O(i) and O(j).
                C.homchars[{i, j}] = {{0, sym_power(vdual, j - i)}};
            } else {
                C.homchars[{i, j}] = {};
            }
        }
    validate_collection(C);
    return C;
}

ExcCollection catalog_quadric(int n) {
    if (n < 3) throw InvalidInput("quadric catalog needs n >= 3");
    const int m = n - 2;  // dimension of the quadric
    ExcCollection C;
    C.name = "quadric:" + std::to_string(n);
    C.hom_ext = one_element_extension();
    const ClassesPtr cls = conjugacy_classes(C.hom_ext->bar);

    if (m % 2 == 1) {
        C.objects.push_back(ExcObject{"S", 0, std::nullopt, std::nullopt});
    } else {
        C.objects.push_back(ExcObject{"S+", 0, std::nullopt, std::nullopt});
        C.objects.push_back(ExcObject{"S-", 0, std::nullopt, std::nullopt});
    }
    const int spinors = C.size();
    for (int j = -(m - 1); j <= 0; ++j) {
        ExcObject obj;
        obj.label = j == 0 ? "O" : "O(" + std::to_string(j) + ")";
        obj.block = 1 + (j + m - 1);
        obj.weight = -j;
        C.objects.push_back(std::move(obj));
    }

    // Sections of O(k) on a quadric in P^{n-1}: the ambient count minus the
    // multiples of the defining equation.
    auto section_dim = [&](int k) {
        return binomial(n - 1 + k, k) - binomial(n - 3 + k, k - 2);
    };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int p = spinors + a;
            const int q = spinors + b;
            if (a == b) {
                C.homchars[{p, q}] = {{0, scaled_trivial(cls, 1, 0)}};
            } else if (a < b) {
                C.homchars[{p, q}] = {{0, scaled_trivial(cls, section_dim(b - a), 0)}};
            } else {
                C.homchars[{p, q}] = {};
            }
        }
    validate_collection(C);
    return C;
}

ExcCollection catalog_grassmannian(int k, int n) {
    if (k < 1 || k >= n) throw InvalidInput("grassmannian catalog needs 1 <= k < n");
    ExcCollection C;
    C.name = "grassmannian:" + std::to_string(k) + "," + std::to_string(n);
    C.hom_ext = one_element_extension();
    const ClassesPtr cls = conjugacy_classes(C.hom_ext->bar);

    const int box = k * (n - k);
    for (int size = box; size >= 0; --size) {
        const int block = box - size;
        for (const auto& lambda : young_diagrams(k, n - k, size)) {
            ExcObject obj;
            if (lambda.empty()) {
                obj.label = "O";
            } else {
                std::string parts;
                for (std::size_t i = 0; i < lambda.size(); ++i) {
                    if (i) parts += ",";
                    parts += std::to_string(lambda[i]);
                }
                obj.label = "Sigma^(" + parts + ")S";
            }
            obj.block = block;
            obj.weight = size;
            C.objects.push_back(std::move(obj));
        }
    }
    for (int p = 0; p < C.size(); ++p) C.homchars[{p, p}] = {{0, scaled_trivial(cls, 1, 0)}};
    validate_collection(C);
    return C;
}

namespace {

void push_line(ExcCollection& C, const std::string& label, int block, const PicVec& D) {
    ExcObject obj;
    obj.label = label;
    obj.block = block;
    obj.kclass = line_bundle_class(*C.lat, D);
    C.objects.push_back(std::move(obj));
}

}  // namespace

ExcCollection catalog_delpezzo(const std::string& variant) {
    ExcCollection C;
    C.name = "delpezzo:" + variant;

    if (variant.rfind("eooo", 0) == 0 && variant.size() == 5 && variant[4] >= '0' &&
        variant[4] <= '4') {
        const int r = variant[4] - '0';
        C.lat = PicLattice{r};
        const PicLattice& lat = *C.lat;
        for (int i = 1; i <= r; ++i) {
            ExcObject obj;
            obj.label = "O_E" + std::to_string(i) + "(-1)";
            obj.block = 0;
            obj.kclass = torsion_curve_class(lat, lat.E(i));
            C.objects.push_back(std::move(obj));
        }
        const int base = r >= 1 ? 1 : 0;
        for (int kk = 0; kk <= 2; ++kk) {
            PicVec D = lat.zero();
            D[0] = kk;
            push_line(C, kk == 0 ? "O" : kk == 1 ? "O(L)" : "O(2L)", base + kk, D);
        }
        validate_collection(C);
        return C;
    }

    if (variant == "kn3") {
        C.lat = PicLattice{3};
        const PicLattice& lat = *C.lat;
        push_line(C, "O", 0, lat.zero());
        for (int i = 1; i <= 3; ++i) {
            PicVec D = lat.L();
            D[i] -= 1;
            push_line(C, "O(" + lat.vec_str(D) + ")", 1, D);
        }
        push_line(C, "O(L)", 2, lat.L());
        PicVec D = lat.zero();
        D[0] = 2;
        for (int i = 1; i <= 3; ++i) D[i] = -1;
        push_line(C, "O(" + lat.vec_str(D) + ")", 2, D);
        validate_collection(C);
        return C;
    }

    if (variant == "kn4") {
        C.lat = PicLattice{4};
        const PicLattice& lat = *C.lat;
        push_line(C, "O", 0, lat.zero());
        {
            ExcObject obj;
            obj.label = "F";
            obj.block = 1;
            PicVec c1 = lat.K();
            for (long& c : c1) c = -c;
            obj.kclass = KClass{2, c1, frac(1, 2)};
            C.objects.push_back(std::move(obj));
        }
        push_line(C, "O(L)", 2, lat.L());
        for (int i = 1; i <= 4; ++i) {
            // Ei - K - L = 2L - (sum of the other three exceptional classes).
            PicVec D = lat.zero();
            D[0] = 2;
            for (int j = 1; j <= 4; ++j)
                if (j != i) D[j] = -1;
            push_line(C, "O(E" + std::to_string(i) + "-K-L)", 2, D);
        }
        validate_collection(C);
        return C;
    }

    throw InvalidInput("unknown del Pezzo variant \"" + variant + "\"");
}

PicMap pic_automorphism_from_involution(const PicLattice& lat, const PointSwap& s) {
    if (s.i < 1 || s.i > lat.r || s.j < 1 || s.j > lat.r || s.i == s.j)
        throw InvalidInput("point swap indices out of range");
    const int n = lat.rank();
    std::vector<std::vector<long>> mat(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) mat[i][i] = 1;
    mat[s.i][s.i] = mat[s.j][s.j] = 0;
    mat[s.i][s.j] = mat[s.j][s.i] = 1;
    return PicMap(lat, mat);
}

PicMap pic_automorphism_from_involution(const PicLattice& lat, const QuadraticTransform& t) {
    const int a = t.i, b = t.j, c = t.k;
    if (a < 1 || b < 1 || c < 1 || a > lat.r || b > lat.r || c > lat.r || a == b || a == c ||
        b == c)
        throw InvalidInput("quadratic transform indices out of range");
    const int n = lat.rank();
    std::vector<std::vector<long>> mat(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) mat[i][i] = 1;
    // Columns are images of basis vectors: f(L) = 2L - Ea - Eb - Ec,
    // f(Ea) = L - Eb - Ec, f(Eb) = L - Ea - Ec, f(Ec) = L - Ea - Eb.
    auto set_col = [&](int col, long lcoef, int e1, int e2, int e3) {
        for (int i = 0; i < n; ++i) mat[i][col] = 0;
        mat[0][col] = lcoef;
        if (e1) mat[e1][col] = -1;
        if (e2) mat[e2][col] = -1;
        if (e3) mat[e3][col] = -1;
    };
    set_col(0, 2, a, b, c);
    set_col(a, 1, b, c, 0);
    set_col(b, 1, a, c, 0);
    set_col(c, 1, a, b, 0);
    return PicMap(lat, mat);
}

}  // namespace eqc
