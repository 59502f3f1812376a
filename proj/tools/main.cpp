#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqc/catalogs.hpp"
#include "eqc/cocycle.hpp"
#include "eqc/cyc.hpp"
#include "eqc/error.hpp"
#include "eqc/group.hpp"
#include "eqc/pic_lattice.hpp"
#include "eqc/runspec.hpp"

namespace {

using namespace eqc;

int run_command(const std::string& spec_path, const std::string& catalog,
                const std::string& out_path, const std::string& format) {
    if (spec_path.empty() == catalog.empty()) {
        std::cerr << "error: give exactly one of --spec and --catalog\n";
        return 2;
    }

    RunOutcome outcome;
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) {
            std::cerr << "error: cannot read " << spec_path << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        outcome = run_spec_json(buf.str());
    } else {
        outcome = run_catalog_shortcut(catalog);
    }

    if (!outcome.input_ok) {
        std::cerr << "error: " << outcome.error << "\n";
        return 2;
    }

    const std::string& report = format == "json" ? outcome.report_json : outcome.report_text;
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << report;
    }
    return outcome.verify_ok ? 0 : 1;
}

GroupPtr cyclic_group(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return std::make_shared<const FiniteGroup>(std::move(table));
}

/// The carry cocycle on Z/n with values in Z/d: alpha(i,j) = floor((i+j)/n).
/// Its class generates the image of H^2(Z/n, Z) = Z/n in Z/d, so its order
/// in H^2(Z/n, Z/d) is exactly gcd(n, d). That gcd is the oracle below.
Cocycle2 carry_cocycle(const GroupPtr& zn, int d) {
    int n = zn->order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((i + j) / n) % d;
    return make_cocycle(zn, d, std::move(t));
}

struct PropReporter {
    bool all_ok = true;

    void report(const std::string& name, long cases, const std::string& failure) {
        if (failure.empty()) {
            std::cout << "ok   " << name << " (" << cases << " cases)\n";
        } else {
            std::cout << "FAIL " << name << ": " << failure << "\n";
            all_ok = false;
        }
    }
};

std::string prop_mutation_round_trip(std::mt19937_64& rng, int count, long& cases) {
    std::vector<std::string> variants = {"eooo2", "eooo3", "eooo4", "kn3", "kn4"};
    for (int it = 0; it < count; ++it) {
        const std::string& v = variants[rng() % variants.size()];
        ExcCollection c = catalog_delpezzo(v);
        std::vector<KClass> ks;
        for (const auto& o : c.objects) ks.push_back(*o.kclass);
        int pos = static_cast<int>(rng() % (ks.size() - 1));
        bool left_first = rng() % 2 == 0;
        std::vector<KClass> w = ks;
        mutate(*c.lat, w, pos, left_first ? MutationSide::Left : MutationSide::Right);
        mutate(*c.lat, w, pos, left_first ? MutationSide::Right : MutationSide::Left);
        if (w != ks) {
            ++cases;
            return v + ": round trip at position " + std::to_string(pos) +
                   " did not restore the collection";
        }
        ++cases;
    }
    return "";
}

std::string prop_mutation_preserves_exceptional(std::mt19937_64& rng, int count, long& cases) {
    std::vector<std::string> variants = {"eooo3", "eooo4", "kn3", "kn4"};
    for (int it = 0; it < count; ++it) {
        const std::string& v = variants[rng() % variants.size()];
        ExcCollection c = catalog_delpezzo(v);
        std::vector<KClass> ks;
        for (const auto& o : c.objects) ks.push_back(*o.kclass);
        int len = 1 + static_cast<int>(rng() % 6);
        for (int s = 0; s < len; ++s) {
            int pos = static_cast<int>(rng() % (ks.size() - 1));
            mutate(*c.lat, ks, pos, rng() % 2 ? MutationSide::Left : MutationSide::Right);
        }
        auto gram = gram_matrix(*c.lat, ks);
        for (size_t p = 0; p < ks.size(); ++p) {
            if (gram[p][p] != 1) {
                ++cases;
                return v + ": diagonal entry != 1 after a mutation word";
            }
            for (size_t q = 0; q < p; ++q)
                if (gram[p][q] != 0) {
                    ++cases;
                    return v + ": backward pairing != 0 after a mutation word";
                }
        }
        ++cases;
    }
    return "";
}

std::string prop_carry_cocycle_order(std::mt19937_64& rng, int count, long& cases) {
    for (int it = 0; it < count; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        int d = 2 + static_cast<int>(rng() % 5);
        GroupPtr zn = cyclic_group(n);
        Cocycle2 alpha = carry_cocycle(zn, d);
        int expect = std::gcd(n, d);
        int got = class_order(alpha);
        if (got != expect) {
            ++cases;
            return "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": class order " +
                   std::to_string(got) + ", expected gcd " + std::to_string(expect);
        }
        // Shifting by a coboundary must not change the class order.
        std::vector<int> gamma(n);
        for (int& x : gamma) x = static_cast<int>(rng() % d);
        Cocycle2 shifted = cocycle_combine(alpha, coboundary(zn, d, gamma), 1, 1);
        int got2 = class_order(shifted);
        if (got2 != expect) {
            ++cases;
            return "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                   ": coboundary shift changed the class order to " + std::to_string(got2);
        }
        ++cases;
    }
    return "";
}

std::string prop_cyc_identities(std::mt19937_64& rng, int count, long& cases) {
    auto random_cyc = [&rng](int m) {
        Cyc v;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 6);
            v = v + Cyc::zeta(m, static_cast<long>(rng() % m)) * frac(num, den);
        }
        return v;
    };
    for (int it = 0; it < count; ++it) {
        int m = 1 + static_cast<int>(rng() % 24);
        Cyc a = random_cyc(m);
        Cyc b = random_cyc(m % 2 == 0 ? m / 2 + 1 : m);
        Cyc c = random_cyc(m);
        if (!(a * (b + c) == a * b + a * c)) {
            ++cases;
            return "distributivity failed at conductor " + std::to_string(m);
        }
        if (!(a.conj().conj() == a)) {
            ++cases;
            return "conjugation is not an involution at conductor " + std::to_string(m);
        }
        if (!((a * b).conj() == a.conj() * b.conj())) {
            ++cases;
            return "conjugation is not multiplicative at conductor " + std::to_string(m);
        }
        Cyc z = Cyc::zeta(m, 1);
        Cyc p(1L);
        for (int k = 0; k < m; ++k) p = p * z;
        if (!(p == Cyc(1L))) {
            ++cases;
            return "zeta_m^m != 1 at m = " + std::to_string(m);
        }
        long k = static_cast<long>(rng() % m);
        long l = 2 + static_cast<long>(rng() % 3);
        if (!(Cyc::zeta(m, k) == Cyc::zeta(static_cast<int>(l) * m, l * k))) {
            ++cases;
            return "embedding zeta_m^k != zeta_{lm}^{lk} at m = " + std::to_string(m);
        }
        ++cases;
    }
    return "";
}

int proptest_command(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    PropReporter rep;

    auto run_prop = [&](const std::string& name, auto fn) {
        long cases = 0;
        std::string fail;
        try {
            fail = fn(rng, count, cases);
        } catch (const std::exception& e) {
            fail = std::string("unexpected exception: ") + e.what();
        }
        rep.report(name, cases, fail);
    };

    run_prop("mutation round trip restores the collection", prop_mutation_round_trip);
    run_prop("mutation words preserve numerical exceptionality",
             prop_mutation_preserves_exceptional);
    run_prop("carry cocycle class order equals gcd(n, d)", prop_carry_cocycle_order);
    run_prop("cyclotomic field identities", prop_cyc_identities);

    return rep.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant exceptional collection toolkit"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a JSON spec or a catalog shortcut");
    std::string spec_path, catalog, out_path;
    std::string format = "text";
    run->add_option("--spec", spec_path, "Path to a JSON run specification");
    run->add_option("--catalog", catalog,
                    "Catalog shortcut, e.g. projective:3, quadric:5, "
                    "grassmannian:2,4, delpezzo:kn3");
    run->add_option("--out", out_path, "Write the report here instead of stdout");
    run->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));

    auto* prop = app.add_subcommand("proptest", "Randomized property checks");
    std::uint64_t seed = 20260816;
    int count = 200;
    prop->add_option("--seed", seed, "Random seed");
    prop->add_option("--count", count, "Cases per property")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return run_command(spec_path, catalog, out_path, format);
        return proptest_command(seed, count);
    } catch (const eqc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
