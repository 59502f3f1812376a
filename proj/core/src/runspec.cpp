#include "eqc/runspec.hpp"

#include <optional>
#include <sstream>

#include <json.hpp>

#include "eqc/builder.hpp"
#include "eqc/catalogs.hpp"
#include "eqc/error.hpp"

namespace eqc {

namespace {

using nlohmann::json;

struct SpecData {
    json catalog;
    std::optional<json> group;
    std::optional<json> extension;
    std::optional<json> action;
    std::optional<json> character;
    bool verify_numeric = true;
    bool verify_action = true;
    bool verify_equivariant = true;
    std::map<int, int> preferred_reps;
};

SpecData parse_spec(const json& j) {
    if (!j.is_object()) throw InvalidInput("spec must be a JSON object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"] != 1)
        throw InvalidInput("spec needs \"schema\": 1");
    if (!j.contains("catalog") || !j["catalog"].is_object() ||
        !j["catalog"].contains("id"))
        throw InvalidInput("spec needs a \"catalog\" object with an \"id\"");
    SpecData s;
    s.catalog = j["catalog"];
    if (j.contains("group")) s.group = j["group"];
    if (j.contains("extension")) s.extension = j["extension"];
    if (j.contains("action")) s.action = j["action"];
    if (j.contains("character")) s.character = j["character"];
    if (j.contains("verify")) {
        const json& v = j["verify"];
        s.verify_numeric = v.value("numeric", true);
        s.verify_action = v.value("action", true);
        s.verify_equivariant = v.value("equivariant", true);
    }
    if (j.contains("options") && j["options"].contains("preferred_reps"))
        for (const auto& [key, val] : j["options"]["preferred_reps"].items())
            s.preferred_reps[std::stoi(key)] = val.get<int>();
    return s;
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidInput(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<std::vector<int>> int_table(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const json& row : j) {
        if (!row.is_array()) throw InvalidInput(std::string(what) + " rows must be arrays");
        table.push_back(row.get<std::vector<int>>());
    }
    return table;
}

/// Group data as the runner uses it: the group itself plus, when it came
/// from permutation generators, the generated-group bookkeeping.
struct GroupData {
    GroupPtr G;
    std::optional<GeneratedGroup> generated;
};

GroupData build_group(const std::optional<json>& spec) {
    GroupData out;
    if (!spec) {
        out.G = std::make_shared<const FiniteGroup>(std::vector<std::vector<int>>{{0}});
        return out;
    }
    const json& g = *spec;
    if (g.contains("generators")) {
        const int degree = require_int(g, "degree");
        std::vector<Perm> gens;
        for (const json& text : g["generators"]) {
            if (!text.is_string()) throw InvalidInput("generators must be cycle strings");
            gens.push_back(parse_cycles(text.get<std::string>(), degree));
        }
        out.generated = group_from_generators(gens, degree);
        out.G = out.generated->group;
        return out;
    }
    if (g.contains("table")) {
        out.G = std::make_shared<const FiniteGroup>(int_table(g["table"], "group table"));
        return out;
    }
    throw InvalidInput("group needs either \"generators\" or \"table\"");
}

Cyc parse_cyc_value(const json& v, int conductor) {
    if (v.is_string()) return Cyc(parse_rational(v.get<std::string>()));
    if (v.is_number_integer()) return Cyc(static_cast<long>(v.get<long>()));
    if (v.is_array()) {
        std::vector<Rational> coeffs;
        for (const json& c : v)
            coeffs.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                                           : Rational(c.get<long>()));
        if (static_cast<int>(coeffs.size()) != conductor)
            throw InvalidInput("cyclotomic value needs one coefficient per power");
        return Cyc(conductor, std::move(coeffs));
    }
    throw InvalidInput("character values must be rationals or coefficient arrays");
}

Character build_character(const std::optional<json>& spec, const GroupData& gd,
                          const CentralExtPtr& ext, int n) {
    const ClassesPtr cls = conjugacy_classes(ext->bar);
    if (!spec) {
        if (gd.G->order() == 1) {
            // Group-free inspection: the n-dimensional trivial bundle.
            Character chi = trivial_character(cls);
            for (Cyc& v : chi.values) v = v * Rational(n);
            return chi;
        }
        throw InvalidInput("the projective catalog needs a \"character\" when a group acts");
    }
    const json& c = *spec;
    if (c.value("type", "") == std::string("permutation")) {
        if (!gd.generated)
            throw InvalidInput("a permutation character requires generator-defined groups");
        Character chi;
        chi.cls = cls;
        for (int k = 0; k < cls->count(); ++k) {
            const int g = ext->proj(cls->reps[k]);
            const Perm& p = gd.generated->elements[g];
            long fixed = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] == static_cast<int>(i)) ++fixed;
            chi.values.push_back(Cyc(fixed));
        }
        return chi;
    }
    if (c.contains("values")) {
        const int conductor = c.value("conductor", 1);
        if (conductor < 1) throw InvalidInput("conductor must be positive");
        const json& vals = c["values"];
        if (!vals.is_array() || static_cast<int>(vals.size()) != cls->count())
            throw InvalidInput("character needs one value per class of the extension group (" +
                               std::to_string(cls->count()) + ")");
        Character chi;
        chi.cls = cls;
        for (const json& v : vals) chi.values.push_back(parse_cyc_value(v, conductor));
        return chi;
    }
    throw InvalidInput("character needs \"type\": \"permutation\" or explicit \"values\"");
}

ExcCollection build_catalog(const SpecData& s, const GroupData& gd, const CentralExtPtr& ext) {
    const std::string id = s.catalog["id"].get<std::string>();
    if (id == "projective") {
        const int n = require_int(s.catalog, "n");
        return catalog_projective(n, ext, build_character(s.character, gd, ext, n));
    }
    if (id == "quadric") return catalog_quadric(require_int(s.catalog, "n"));
    if (id == "grassmannian")
        return catalog_grassmannian(require_int(s.catalog, "k"), require_int(s.catalog, "n"));
    if (id == "delpezzo") {
        if (!s.catalog.contains("variant"))
            throw InvalidInput("del Pezzo catalog needs a \"variant\"");
        return catalog_delpezzo(s.catalog["variant"].get<std::string>());
    }
    if (id == "custom") {
        if (!s.catalog.contains("objects") || !s.catalog["objects"].is_array() ||
            s.catalog["objects"].empty())
            throw InvalidInput("custom catalog needs a nonempty \"objects\" array");
        ExcCollection C;
        C.name = "custom";
        C.hom_ext = ext;
        for (const json& o : s.catalog["objects"]) {
            ExcObject obj;
            obj.label = o.at("label").get<std::string>();
            obj.block = o.value("block", 0);
            if (o.contains("weight")) obj.weight = o["weight"].get<int>();
            C.objects.push_back(std::move(obj));
        }
        // Self-homs of exceptional objects are one line in degree 0.
        const ClassesPtr cls = conjugacy_classes(ext->bar);
        Character triv = trivial_character(cls);
        triv.weight = 0;
        for (int p = 0; p < C.size(); ++p) C.homchars[{p, p}] = {{0, triv}};
        validate_collection(C);
        return C;
    }
    throw InvalidInput("unknown catalog id \"" + id + "\"");
}

std::vector<int> object_map_to_perm(const ExcCollection& C, const json& m) {
    if (!m.is_object()) throw InvalidInput("object maps must be label-to-label objects");
    std::vector<int> perm(C.size());
    for (int i = 0; i < C.size(); ++i) perm[i] = i;
    for (const auto& [from, to] : m.items()) {
        if (!to.is_string()) throw InvalidInput("object map images must be labels");
        perm[C.index_of(from)] = C.index_of(to.get<std::string>());
    }
    return perm;
}

std::vector<std::vector<long>> long_matrix(const json& j) {
    std::vector<std::vector<long>> m;
    for (const json& row : j) m.push_back(row.get<std::vector<long>>());
    return m;
}

GroupAction build_action(const SpecData& s, const ExcCollection& C, const GroupData& gd) {
    if (!s.action) return trivial_action(C, gd.G);
    const json& a = *s.action;
    std::vector<std::vector<int>> maps;
    if (a.contains("object_maps"))
        for (const json& m : a["object_maps"]) maps.push_back(object_map_to_perm(C, m));

    if (gd.generated) {
        const int ngens = static_cast<int>(gd.generated->generator_index.size());
        if (static_cast<int>(maps.size()) != ngens)
            throw InvalidInput("action needs one object map per generator");
        std::vector<std::vector<std::vector<long>>> mats;
        if (a.contains("lattice_maps"))
            for (const json& m : a["lattice_maps"]) mats.push_back(long_matrix(m));
        return action_from_generator_images(C, *gd.generated, maps, mats);
    }

    // Table-defined group: maps are per element.
    if (static_cast<int>(maps.size()) != gd.G->order())
        throw InvalidInput("action on a table-defined group needs one object map per element");
    GroupAction A;
    A.G = gd.G;
    A.obj_perm = std::move(maps);
    if (a.contains("lattice_maps")) {
        if (!C.lat) throw InvalidInput("lattice maps require a lattice");
        for (const json& m : a["lattice_maps"]) A.lattice_maps.emplace_back(*C.lat, long_matrix(m));
        if (static_cast<int>(A.lattice_maps.size()) != gd.G->order())
            throw InvalidInput("action on a table-defined group needs one lattice map per element");
    }
    return A;
}

json kclass_json(const std::optional<KClass>& k) {
    if (!k) return nullptr;
    json out;
    out["rank"] = k->rank;
    out["c1"] = k->c1;
    out["ch2"] = to_string(k->ch2);
    return out;
}

std::string bar_element_str(const CentralExt& ext, const GroupData& gd, int x) {
    const int g = ext.proj(x);
    const int j = ext.fiber(x);
    const std::string base =
        gd.generated ? cycles_str(gd.generated->elements[g]) : std::to_string(g);
    return "[" + base + ", " + std::to_string(j) + "]";
}

json group_json(const GroupData& gd) {
    json out;
    out["order"] = gd.G->order();
    out["abelian"] = gd.G->is_abelian();
    const ClassesPtr cls = conjugacy_classes(gd.G);
    json classes = json::array();
    for (int k = 0; k < cls->count(); ++k) {
        json c;
        c["rep"] = gd.generated ? cycles_str(gd.generated->elements[cls->reps[k]])
                                : std::to_string(cls->reps[k]);
        c["size"] = cls->classes[k].size();
        c["order"] = gd.G->element_order(cls->reps[k]);
        classes.push_back(c);
    }
    out["classes"] = classes;
    return out;
}

struct RunResult {
    json report;
    std::string text;
    bool verify_ok = true;
};

RunResult run_parsed(const SpecData& s) {
    GroupData gd = build_group(s.group);

    Cocycle2 alpha = [&] {
        if (s.extension) {
            const int d = require_int(*s.extension, "d");
            if (!s.extension->contains("cocycle"))
                throw InvalidInput("extension needs a \"cocycle\" table");
            return make_cocycle(gd.G, d, int_table((*s.extension)["cocycle"], "cocycle"));
        }
        return zero_cocycle(gd.G, 1);
    }();
    CentralExtPtr ext = central_extension(alpha);

    ExcCollection C = build_catalog(s, gd, ext);
    GroupAction A = build_action(s, C, gd);

    NumericCheck numeric = check_numeric(C);
    ActionCheck action = check_action(C, A);

    CocycleAssignment assign;
    if (s.extension) assign.global = alpha;
    BuildOptions opts;
    opts.preferred_reps = s.preferred_reps;

    std::optional<EqCollection> eq;
    std::optional<EqCheck> eqcheck;
    std::optional<RankReport> ranks;
    if (action.ok()) {
        eq = build_equivariant(C, A, assign, opts);
        eqcheck = check_equivariant(*eq);
        ranks = rank_report(*eq);
    }

    json report;
    report["schema"] = 1;

    json base;
    base["name"] = C.name;
    base["hom_pairs_recorded"] = C.homchars.size();
    json objs = json::array();
    for (const ExcObject& o : C.objects) {
        json jo;
        jo["label"] = o.label;
        jo["block"] = o.block;
        jo["weight"] = o.weight ? json(*o.weight) : json(nullptr);
        jo["kclass"] = kclass_json(o.kclass);
        objs.push_back(jo);
    }
    base["objects"] = objs;
    json num;
    num["applicable"] = numeric.applicable;
    num["objects_exceptional"] = numeric.objects_exceptional;
    num["blocks_orthogonal"] = numeric.blocks_orthogonal;
    num["backward_zero"] = numeric.backward_zero;
    num["hom_data_consistent"] = numeric.hom_data_consistent;
    num["ok"] = numeric.ok();
    base["numeric"] = num;
    if (C.lat && numeric.applicable) {
        std::vector<KClass> ks;
        for (const ExcObject& o : C.objects) ks.push_back(*o.kclass);
        json gram = json::array();
        for (const auto& row : gram_matrix(*C.lat, ks)) {
            json r = json::array();
            for (const Integer& x : row) r.push_back(x.get_si());
            gram.push_back(r);
        }
        base["gram"] = gram;
    } else {
        base["gram"] = nullptr;
    }
    report["base"] = base;

    report["group"] = s.group ? group_json(gd) : json(nullptr);
    if (s.extension) {
        json e;
        e["d"] = ext->d;
        e["order"] = ext->bar->order();
        const ClassesPtr bcls = conjugacy_classes(ext->bar);
        json classes = json::array();
        for (int k = 0; k < bcls->count(); ++k) {
            json c;
            c["rep"] = bar_element_str(*ext, gd, bcls->reps[k]);
            c["size"] = bcls->classes[k].size();
            classes.push_back(c);
        }
        e["classes"] = classes;
        report["extension"] = e;
    } else {
        report["extension"] = nullptr;
    }

    json act;
    act["homomorphism"] = action.homomorphism;
    act["blocks_preserved"] = action.blocks_preserved;
    act["kclasses_compatible"] = action.kclasses_compatible;
    act["weights_constant"] = action.weights_constant;
    act["ok"] = action.ok();
    json orbits = json::array();
    for (const auto& orbit : action.orbits) {
        json members = json::array();
        for (int m : orbit) members.push_back(C.objects[m].label);
        orbits.push_back(members);
    }
    act["orbits"] = orbits;
    json stabs = json::array();
    for (const auto& st : action.stabilizers) stabs.push_back(st.size());
    act["stabilizer_orders"] = stabs;
    report["action"] = act;

    if (eq) {
        json e;
        json eobjs = json::array();
        for (const EqObject& o : eq->objects) {
            json jo;
            jo["label"] = o.label;
            jo["block"] = o.block;
            jo["orbit"] = o.orbit;
            jo["path"] = o.path;
            jo["dim"] = o.irrep.chi.dim();
            jo["weight"] = o.irrep.weight;
            jo["underlying"] = kclass_json(o.underlying);
            eobjs.push_back(jo);
        }
        e["objects"] = eobjs;
        e["per_orbit"] = ranks->per_orbit;
        e["per_block"] = ranks->per_block;
        e["total"] = ranks->total;
        json grid = json::array();
        for (int p = 0; p < eq->size(); ++p) {
            json row = json::array();
            for (int q = 0; q < eq->size(); ++q) {
                auto d = hom_dim(*eq, p, q);
                row.push_back(d ? json(*d) : json(nullptr));
            }
            grid.push_back(row);
        }
        e["hom_grid"] = grid;
        json chk;
        chk["diagonal_ones"] = eqcheck->diagonal_ones;
        chk["backward_zero"] = eqcheck->backward_zero;
        chk["known_pairs"] = eqcheck->known_pairs;
        chk["unknown_pairs"] = eqcheck->unknown_pairs;
        chk["ok"] = eqcheck->ok();
        e["check"] = chk;
        report["equivariant"] = e;
    } else {
        report["equivariant"] = nullptr;
    }

    json checks;
    checks["numeric"] = s.verify_numeric ? json(numeric.ok()) : json(nullptr);
    checks["action"] = s.verify_action ? json(action.ok()) : json(nullptr);
    checks["equivariant"] =
        s.verify_equivariant ? json(eqcheck ? eqcheck->ok() : false) : json(nullptr);
    report["checks"] = checks;

    bool ok = true;
    if (s.verify_numeric && !numeric.ok()) ok = false;
    if (s.verify_action && !action.ok()) ok = false;
    if (s.verify_equivariant && !(eqcheck && eqcheck->ok())) ok = false;
    report["ok"] = ok;

    // Text rendering.
    std::ostringstream text;
    text << "spec: " << C.name << "\n";
    if (s.group)
        text << "group: order " << gd.G->order() << ", "
             << conjugacy_classes(gd.G)->count() << " classes\n";
    if (s.extension) text << "extension: Z/" << ext->d << ", order " << ext->bar->order() << "\n";
    text << "base: " << C.size() << " objects, numeric "
         << (numeric.applicable ? (numeric.ok() ? "pass" : "FAIL")
                                : (numeric.ok() ? "pass (pairings not applicable)" : "FAIL"))
         << "\n";
    text << "action: " << (action.ok() ? "pass" : "FAIL") << ", orbits:";
    for (const auto& orbit : action.orbits) {
        text << " {";
        for (std::size_t i = 0; i < orbit.size(); ++i)
            text << (i ? " " : "") << C.objects[orbit[i]].label;
        text << "}";
    }
    text << "\n";
    if (eq) {
        text << "equivariant: " << eq->size() << " objects (per orbit:";
        for (int c : ranks->per_orbit) text << " " << c;
        text << ")\n";
        for (int p = 0; p < eq->size(); ++p) {
            const EqObject& o = eq->objects[p];
            text << "  " << (p + 1) << ". " << o.label << "  [" << o.path << ", block "
                 << o.block << ", dim " << o.irrep.chi.dim() << "]\n";
        }
        text << "hom grid (rows -> columns, ? unknown):\n";
        for (int p = 0; p < eq->size(); ++p) {
            text << " ";
            for (int q = 0; q < eq->size(); ++q) {
                auto d = hom_dim(*eq, p, q);
                text << " " << (d ? std::to_string(*d) : std::string("?"));
            }
            text << "\n";
        }
        text << "equivariant check: " << (eqcheck->ok() ? "pass" : "FAIL") << " ("
             << eqcheck->known_pairs << " known, " << eqcheck->unknown_pairs << " unknown)\n";
    } else {
        text << "equivariant: skipped (action failed verification)\n";
    }
    text << "result: " << (ok ? "pass" : "FAIL") << "\n";

    RunResult out;
    out.report = std::move(report);
    out.text = text.str();
    out.verify_ok = ok;
    return out;
}

RunOutcome run_json(const json& j) {
    RunOutcome out;
    try {
        SpecData s = parse_spec(j);
        RunResult r = run_parsed(s);
        out.input_ok = true;
        out.verify_ok = r.verify_ok;
        out.report_json = r.report.dump(2) + "\n";
        out.report_text = r.text;
    } catch (const std::exception& e) {
        out.input_ok = false;
        out.verify_ok = false;
        out.error = e.what();
    }
    return out;
}

}  // namespace

RunOutcome run_spec_json(const std::string& spec_json) {
    json j;
    try {
        j = json::parse(spec_json);
    } catch (const std::exception& e) {
        RunOutcome out;
        out.error = std::string("spec is not valid JSON: ") + e.what();
        return out;
    }
    return run_json(j);
}

RunOutcome run_catalog_shortcut(const std::string& shortcut) {
    RunOutcome bad;
    const auto colon = shortcut.find(':');
    const std::string id = shortcut.substr(0, colon == std::string::npos ? shortcut.size() : colon);
    const std::string args = colon == std::string::npos ? "" : shortcut.substr(colon + 1);
    json spec;
    spec["schema"] = 1;
    try {
        if (id == "projective" || id == "quadric") {
            spec["catalog"] = {{"id", id}, {"n", std::stoi(args)}};
        } else if (id == "grassmannian") {
            const auto comma = args.find(',');
            if (comma == std::string::npos)
                throw InvalidInput("grassmannian shortcut needs k,n");
            spec["catalog"] = {{"id", id},
                               {"k", std::stoi(args.substr(0, comma))},
                               {"n", std::stoi(args.substr(comma + 1))}};
        } else if (id == "delpezzo") {
            spec["catalog"] = {{"id", id}, {"variant", args}};
        } else {
            throw InvalidInput("unknown catalog shortcut \"" + shortcut + "\"");
        }
    } catch (const std::exception& e) {
        bad.error = std::string("bad catalog shortcut: ") + e.what();
        return bad;
    }
    return run_json(spec);
}

}  // namespace eqc
