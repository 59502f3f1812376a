#include "eqc/collection.hpp"

#include <algorithm>
#include <set>

#include "eqc/error.hpp"

namespace eqc {

int ExcCollection::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (objects[i].label == label) return i;
    throw InvalidInput("no object labeled \"" + label + "\"");
}

namespace {

int weight_gap_mod(const ExcCollection& C, int i, int j) {
    const int d = C.hom_ext->d;
    const int wi = C.objects[i].weight.value_or(0);
    const int wj = C.objects[j].weight.value_or(0);
    return (((wj - wi) % d) + d) % d;
}

}  // namespace

void validate_collection(const ExcCollection& C) {
    if (C.objects.empty()) throw InvalidInput("collection has no objects");
    std::set<std::string> labels;
    for (const ExcObject& obj : C.objects)
        if (!labels.insert(obj.label).second)
            throw InvalidInput("duplicate object label \"" + obj.label + "\"");
    if (C.objects.front().block < 0) throw InvalidInput("negative block index");
    for (int i = 1; i < C.size(); ++i)
        if (C.objects[i].block < C.objects[i - 1].block)
            throw InvalidInput("block indices must be nondecreasing");

    const bool any_class =
        std::any_of(C.objects.begin(), C.objects.end(),
                    [](const ExcObject& o) { return o.kclass.has_value(); });
    if (any_class) {
        if (!C.lat) throw InvalidInput("numerical classes require a lattice");
        for (const ExcObject& obj : C.objects) {
            if (!obj.kclass) throw InvalidInput("object \"" + obj.label + "\" has no class");
            if (static_cast<int>(obj.kclass->c1.size()) != C.lat->rank())
                throw InvalidInput("class of \"" + obj.label + "\" has the wrong rank");
        }
    }

    if (!C.homchars.empty() && !C.hom_ext)
        throw InvalidInput("hom data requires a hom extension");
    for (const auto& [key, grading] : C.homchars) {
        if (key.first < 0 || key.first >= C.size() || key.second < 0 || key.second >= C.size())
            throw InvalidInput("hom data indexes a missing object");
        for (const auto& [deg, chi] : grading) {
            if (!chi.cls || chi.cls->G.get() != C.hom_ext->bar.get())
                throw InvalidInput("hom character lives on the wrong group");
            chi.dim();  // must be a (nonnegative) integer
            if (chi.weight &&
                (*chi.weight - weight_gap_mod(C, key.first, key.second)) % C.hom_ext->d != 0)
                throw InconsistentWeights(
                    "hom character weight disagrees with the objects' weight tags");
            (void)deg;
        }
    }
}

namespace {

long grading_dim(const HomGrading& grading, int deg_sign, bool* all_zero) {
    // Alternating (deg_sign = -1) or plain (deg_sign = 1) sum of dimensions.
    long total = 0;
    for (const auto& [deg, chi] : grading) {
        long d = chi.dim();
        if (d != 0 && all_zero) *all_zero = false;
        total += (deg_sign < 0 && (deg % 2 != 0)) ? -d : d;
    }
    return total;
}

}  // namespace

NumericCheck check_numeric(const ExcCollection& C) {
    validate_collection(C);
    NumericCheck out;
    out.applicable = C.lat.has_value() && !C.objects.empty() && C.objects[0].kclass.has_value();

    if (out.applicable) {
        const PicLattice& lat = *C.lat;
        for (int p = 0; p < C.size(); ++p) {
            if (euler_pair(lat, *C.objects[p].kclass, *C.objects[p].kclass) != 1)
                out.objects_exceptional = false;
            for (int q = 0; q < C.size(); ++q) {
                if (p == q) continue;
                const Integer chi = euler_pair(lat, *C.objects[p].kclass, *C.objects[q].kclass);
                if (C.objects[p].block == C.objects[q].block && chi != 0)
                    out.blocks_orthogonal = false;
                if (C.objects[p].block > C.objects[q].block && chi != 0)
                    out.backward_zero = false;
            }
        }
    }

    for (const auto& [key, grading] : C.homchars) {
        const auto& [p, q] = key;
        bool all_zero = true;
        const long alternating = grading_dim(grading, -1, &all_zero);
        if (p != q && C.objects[p].block >= C.objects[q].block && !all_zero)
            out.hom_data_consistent = false;
        if (out.applicable &&
            alternating != euler_pair(*C.lat, *C.objects[p].kclass, *C.objects[q].kclass))
            out.hom_data_consistent = false;
    }
    return out;
}

GroupAction trivial_action(const ExcCollection& C, GroupPtr G) {
    if (!G) throw InvalidInput("trivial_action: null group");
    GroupAction A;
    A.G = std::move(G);
    std::vector<int> id(C.size());
    for (int i = 0; i < C.size(); ++i) id[i] = i;
    A.obj_perm.assign(A.G->order(), id);
    return A;
}

namespace {

void require_object_perm(const std::vector<int>& p, int n, const char* what) {
    if (static_cast<int>(p.size()) != n)
        throw InvalidInput(std::string(what) + ": wrong length");
    std::vector<bool> hit(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || hit[v])
            throw InvalidInput(std::string(what) + ": not a permutation of the objects");
        hit[v] = true;
    }
}

std::vector<std::vector<long>> mat_mul(const std::vector<std::vector<long>>& a,
                                       const std::vector<std::vector<long>>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

std::vector<std::vector<long>> mat_identity(int n) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

GroupAction action_from_generator_images(
    const ExcCollection& C, const GeneratedGroup& gg,
    const std::vector<std::vector<int>>& gen_obj_images,
    const std::vector<std::vector<std::vector<long>>>& gen_lattice_mats) {
    const int ngens = static_cast<int>(gg.generator_index.size());
    if (static_cast<int>(gen_obj_images.size()) != ngens)
        throw InvalidInput("one object map per generator is required");
    for (const auto& img : gen_obj_images)
        require_object_perm(img, C.size(), "generator object map");
    const bool with_maps = !gen_lattice_mats.empty();
    if (with_maps) {
        if (!C.lat) throw InvalidInput("lattice maps require a lattice");
        if (static_cast<int>(gen_lattice_mats.size()) != ngens)
            throw InvalidInput("one lattice map per generator is required");
    }

    const int n = gg.group->order();
    GroupAction A;
    A.G = gg.group;
    A.obj_perm.resize(n);
    std::vector<std::vector<std::vector<long>>> mats(with_maps ? n : 0);

    std::vector<int> id(C.size());
    for (int i = 0; i < C.size(); ++i) id[i] = i;
    A.obj_perm[0] = id;
    if (with_maps) mats[0] = mat_identity(C.lat->rank());

    for (int i = 1; i < n; ++i) {
        const auto [parent, gi] = gg.provenance[i];
        A.obj_perm[i] = perm_compose(A.obj_perm[parent], gen_obj_images[gi]);
        if (with_maps) mats[i] = mat_mul(mats[parent], gen_lattice_mats[gi]);
    }
    if (with_maps)
        for (int i = 0; i < n; ++i) A.lattice_maps.emplace_back(*C.lat, mats[i]);
    return A;
}

ActionCheck check_action(const ExcCollection& C, const GroupAction& A) {
    validate_collection(C);
    if (!A.G) throw InvalidInput("action has no group");
    const int n = A.G->order();
    if (static_cast<int>(A.obj_perm.size()) != n)
        throw InvalidInput("action needs one object permutation per element");
    for (const auto& p : A.obj_perm) require_object_perm(p, C.size(), "object permutation");
    const bool with_maps = !A.lattice_maps.empty();
    if (with_maps && static_cast<int>(A.lattice_maps.size()) != n)
        throw InvalidInput("action needs one lattice map per element");

    ActionCheck out;

    // Homomorphism: identity acts as identity and the table is respected.
    for (int i = 0; i < C.size() && out.homomorphism; ++i)
        if (A.obj_perm[A.G->identity()][i] != i) out.homomorphism = false;
    for (int g = 0; g < n && out.homomorphism; ++g)
        for (int h = 0; h < n && out.homomorphism; ++h) {
            if (A.obj_perm[A.G->mul(g, h)] != perm_compose(A.obj_perm[g], A.obj_perm[h]))
                out.homomorphism = false;
            if (with_maps &&
                A.lattice_maps[A.G->mul(g, h)].matrix() !=
                    mat_mul(A.lattice_maps[g].matrix(), A.lattice_maps[h].matrix()))
                out.homomorphism = false;
        }

    const bool with_classes = C.objects[0].kclass.has_value();
    for (int g = 0; g < n; ++g)
        for (int p = 0; p < C.size(); ++p) {
            const int q = A.obj_perm[g][p];
            if (C.objects[q].block != C.objects[p].block) out.blocks_preserved = false;
            if (with_classes) {
                const KClass expected = with_maps ? A.lattice_maps[g].apply(*C.objects[p].kclass)
                                                  : *C.objects[p].kclass;
                if (!(*C.objects[q].kclass == expected)) out.kclasses_compatible = false;
            }
        }

    // Orbits by first member; members sorted ascending.
    out.orbit_of.assign(C.size(), -1);
    for (int p = 0; p < C.size(); ++p) {
        if (out.orbit_of[p] != -1) continue;
        const int o = static_cast<int>(out.orbits.size());
        std::set<int> members;
        for (int g = 0; g < n; ++g) members.insert(A.obj_perm[g][p]);
        std::vector<int> sorted(members.begin(), members.end());
        for (int m : sorted) {
            if (out.orbit_of[m] != -1 && out.orbit_of[m] != o) out.homomorphism = false;
            out.orbit_of[m] = o;
        }
        out.orbits.push_back(std::move(sorted));
    }

    for (const auto& orbit : out.orbits) {
        const std::optional<int> w0 = C.objects[orbit[0]].weight;
        for (int m : orbit)
            if (C.objects[m].weight != w0) out.weights_constant = false;
        std::vector<int> stab;
        for (int g = 0; g < n; ++g)
            if (A.obj_perm[g][orbit[0]] == orbit[0]) stab.push_back(g);
        out.stabilizers.push_back(std::move(stab));
    }
    return out;
}

}  // namespace eqc
