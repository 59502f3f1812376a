#include "eqc/builder.hpp"

#include <algorithm>

#include "eqc/error.hpp"

namespace eqc {

namespace {

int mod_d(int x, int d) { return ((x % d) + d) % d; }

SubgroupGroup whole_group(const GroupPtr& G) {
    SubgroupGroup s;
    s.group = G;
    s.to_parent.resize(G->order());
    s.from_parent.resize(G->order());
    for (int i = 0; i < G->order(); ++i) s.to_parent[i] = s.from_parent[i] = i;
    return s;
}

bool tables_agree_mod(const std::vector<std::vector<int>>& a,
                      const std::vector<std::vector<int>>& b, int d) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (mod_d(a[i][j], d) != mod_d(b[i][j], d)) return false;
    }
    return true;
}

/// Does the plan's cocycle equal the hom extension's cocycle restricted to
/// the plan's stabilizer?
bool matches_restriction(const OrbitPlan& plan, const CentralExt& homext) {
    if (plan.cocycle.d != homext.d) return false;
    const int h = plan.stab.group->order();
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b)
            if (mod_d(plan.cocycle.table[a][b], homext.d) !=
                mod_d(homext.alpha[plan.stab.to_parent[a]][plan.stab.to_parent[b]], homext.d))
                return false;
    return true;
}

Cocycle2 orbit_cocycle(const ExcCollection& C, const GroupAction& A,
                       const CocycleAssignment& assign, int rep, const SubgroupGroup& stab) {
    auto it = assign.per_rep.find(rep);
    if (it != assign.per_rep.end()) {
        const Cocycle2& given = it->second;
        if (!given.G || given.G->order() != stab.group->order())
            throw InvalidInput("per-representative cocycle has the wrong order");
        // Rebuild on this builder's stabilizer instance; validates the table.
        return make_cocycle(stab.group, given.d, given.table);
    }
    if (assign.global) {
        if (assign.global->G.get() != A.G.get())
            throw InvalidInput("global cocycle lives on a different group");
        return restrict_cocycle(*assign.global, stab);
    }
    return zero_cocycle(stab.group, C.hom_ext ? C.hom_ext->d : 1);
}

}  // namespace

EqCollection build_equivariant(const ExcCollection& C, const GroupAction& A,
                               const CocycleAssignment& assign, const BuildOptions& opts) {
    validate_collection(C);
    if (assign.global && !check_cocycle(assign.global->G, assign.global->d, assign.global->table))
        throw InvalidInput("global cocycle fails the cocycle condition");

    EqCollection out;
    out.base = C;
    out.action = A;
    out.action_check = check_action(C, A);
    if (!out.action_check.ok()) throw InvalidInput("group action fails verification");

    const GroupPtr& G = A.G;
    const bool with_classes = C.objects[0].kclass.has_value();

    for (int o = 0; o < static_cast<int>(out.action_check.orbits.size()); ++o) {
        OrbitPlan plan;
        plan.members = out.action_check.orbits[o];
        plan.rep = plan.members[0];
        if (auto it = opts.preferred_reps.find(o); it != opts.preferred_reps.end()) {
            if (std::find(plan.members.begin(), plan.members.end(), it->second) ==
                plan.members.end())
                throw InvalidInput("preferred representative is outside its orbit");
            plan.rep = it->second;
        }

        for (int g = 0; g < G->order(); ++g)
            if (A.obj_perm[g][plan.rep] == plan.rep) plan.stab_elements.push_back(g);
        plan.full_stabilizer = static_cast<int>(plan.stab_elements.size()) == G->order();
        plan.stab = plan.full_stabilizer
                        ? whole_group(G)
                        : subgroup_as_group(make_subgroup(G, plan.stab_elements));

        plan.cocycle = orbit_cocycle(C, A, assign, plan.rep, plan.stab);
        const int d = plan.cocycle.d;

        if (!C.objects[plan.rep].weight && !plan.cocycle.is_zero())
            throw InvalidInput("orbit of \"" + C.objects[plan.rep].label +
                               "\" is twisted but its objects carry no weight tag");
        plan.weight = C.objects[plan.rep].weight.value_or(0);

        if (plan.full_stabilizer && C.hom_ext && C.hom_ext->d == d &&
            C.hom_ext->base.get() == G.get() &&
            tables_agree_mod(C.hom_ext->alpha, plan.cocycle.table, d)) {
            plan.ext = C.hom_ext;
            plan.ext_is_homext = true;
        } else {
            plan.ext = central_extension(plan.cocycle);
        }
        plan.alpha_matches_homext = C.hom_ext && matches_restriction(plan, *C.hom_ext);

        plan.path = !plan.full_stabilizer ? "orbit-induced"
                    : plan.cocycle.is_zero() ? "equivariant"
                                             : "invariant-twisted";
        plan.irreps = projective_irreps(plan.ext, mod_d(-plan.weight, d));
        plan.first_output = static_cast<int>(out.objects.size());

        for (int k = 0; k < static_cast<int>(plan.irreps.size()); ++k) {
            EqObject obj;
            obj.orbit = o;
            obj.rep_object = plan.rep;
            obj.block = C.objects[plan.rep].block;
            obj.irrep = plan.irreps[k];
            obj.path = plan.path;
            std::string core = C.objects[plan.rep].label + "*V" + std::to_string(k + 1);
            obj.label = plan.full_stabilizer ? core : "Ind(" + core + ")";
            if (with_classes) {
                const long dim = plan.irreps[k].chi.dim();
                KClass acc{0, PicVec(C.lat->rank(), 0), Rational(0)};
                for (int m : plan.members) {
                    const KClass& km = *C.objects[m].kclass;
                    acc.rank += km.rank;
                    for (std::size_t i = 0; i < acc.c1.size(); ++i) acc.c1[i] += km.c1[i];
                    acc.ch2 += km.ch2;
                }
                acc.rank *= dim;
                for (long& c : acc.c1) c *= dim;
                acc.ch2 *= Rational(dim);
                obj.underlying = std::move(acc);
            }
            out.objects.push_back(std::move(obj));
        }
        out.plans.push_back(std::move(plan));
    }
    return out;
}

namespace {

/// Pull a character of the hom extension's group back to a plan's extension
/// along (h, j) -> (to_parent(h), j); valid when the plan's cocycle is the
/// restriction of the hom extension's.
Character restrict_to_plan(const Character& chi, const OrbitPlan& plan,
                           const CentralExt& homext, const ClassesPtr& target_cls) {
    Character out;
    out.cls = target_cls;
    out.weight = chi.weight;
    out.values.reserve(target_cls->count());
    for (int c = 0; c < target_cls->count(); ++c) {
        const int x = target_cls->reps[c];
        const int parent = plan.stab.to_parent[plan.ext->proj(x)];
        out.values.push_back(chi.at_element(homext.encode(parent, plan.ext->fiber(x))));
    }
    return out;
}

bool grading_all_zero(const HomGrading& grading) {
    for (const auto& [deg, chi] : grading) {
        (void)deg;
        if (chi.dim() != 0) return false;
    }
    return true;
}

}  // namespace

std::optional<std::map<int, long>> hom_dims(const EqCollection& E, int p, int q) {
    if (p < 0 || p >= E.size() || q < 0 || q >= E.size())
        throw InvalidInput("hom_dims: object index out of range");
    const EqObject& P = E.objects[p];
    const EqObject& Q = E.objects[q];
    const OrbitPlan& op = E.plans[P.orbit];
    const OrbitPlan& oq = E.plans[Q.orbit];
    const auto& homchars = E.base.homchars;

    if (P.orbit == Q.orbit) {
        // Adjunction collapses to the stabilizer provided distinct orbit
        // members have no recorded homs between them.
        for (int a : op.members)
            for (int b : op.members) {
                if (a == b) continue;
                auto it = homchars.find({a, b});
                if (it != homchars.end() && !grading_all_zero(it->second)) return std::nullopt;
            }

        const Character hom_vv = char_hom(P.irrep.chi, Q.irrep.chi);
        auto self = homchars.find({op.rep, op.rep});
        std::map<int, long> result;
        if (self == homchars.end()) {
            result[0] = invariant_dim(hom_vv);
        } else if (op.ext_is_homext) {
            for (const auto& [deg, chi] : self->second)
                result[deg] = invariant_dim(char_mul(hom_vv, chi));
        } else if (op.alpha_matches_homext) {
            for (const auto& [deg, chi] : self->second)
                result[deg] = invariant_dim(
                    char_mul(hom_vv, restrict_to_plan(chi, op, *E.base.hom_ext, hom_vv.cls)));
        } else {
            return std::nullopt;
        }
        return result;
    }

    if (P.block == Q.block) return std::map<int, long>{};
    if (P.block > Q.block) return std::map<int, long>{};

    if (!op.full_stabilizer || !oq.full_stabilizer) return std::nullopt;
    if (!op.ext_is_homext || !oq.ext_is_homext) return std::nullopt;
    auto it = homchars.find({op.rep, oq.rep});
    if (it == homchars.end()) return std::nullopt;

    const int d = E.base.hom_ext->d;
    const Character hom_vv = char_hom(P.irrep.chi, Q.irrep.chi);
    std::map<int, long> result;
    for (const auto& [deg, chi] : it->second) {
        if (chi.weight && (*chi.weight - (oq.weight - op.weight)) % d != 0)
            throw InconsistentWeights("recorded hom weight contradicts the orbit weight tags");
        result[deg] = invariant_dim(char_mul(hom_vv, chi));
    }
    return result;
}

std::optional<long> hom_dim(const EqCollection& E, int p, int q) {
    auto dims = hom_dims(E, p, q);
    if (!dims) return std::nullopt;
    long total = 0;
    for (const auto& [deg, dim] : dims.value()) {
        (void)deg;
        total += dim;
    }
    return total;
}

RankReport rank_report(const EqCollection& E) {
    RankReport out;
    for (const OrbitPlan& plan : E.plans)
        out.per_orbit.push_back(static_cast<int>(plan.irreps.size()));
    std::map<int, int> by_block;
    for (const EqObject& obj : E.objects) ++by_block[obj.block];
    for (const auto& [block, count] : by_block) {
        (void)block;
        out.per_block.push_back(count);
    }
    out.total = E.size();
    return out;
}

EqCheck check_equivariant(const EqCollection& E) {
    EqCheck out;
    for (int p = 0; p < E.size(); ++p)
        for (int q = 0; q < E.size(); ++q) {
            auto total = hom_dim(E, p, q);
            if (!total) {
                ++out.unknown_pairs;
                continue;
            }
            ++out.known_pairs;
            if (p == q && *total != 1) out.diagonal_ones = false;
            if (p > q && *total != 0) out.backward_zero = false;
        }
    return out;
}

}  // namespace eqc
