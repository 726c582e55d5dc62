// germlab: jets of map germs under A[G] and R x G.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <germlab/germlab.hpp>

using namespace germlab;

namespace
{

struct common {
    std::string format = "json";
    double tol = -1.0;
    bool exact_germ = false;
};

output_format fmt(const common &c)
{
    return c.format == "table" ? output_format::table : output_format::json;
}

double tol_or(const common &c, double fallback)
{
    return c.tol > 0 ? c.tol : fallback;
}

void add_common(CLI::App *s, common &c, bool germ_flags)
{
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    s->add_option("--tol", c.tol, "Numerical tolerance");
    if (germ_flags) {
        s->add_flag("--exact-germ", c.exact_germ, "Treat the germ polynomials as exact (no truncation warning)");
    }
}

germ_jet load_for_order(const std::string &path, unsigned k, const common &c)
{
    const auto g = load_germ_file(path);
    bool padded = false;
    auto f = germ_for_order(g, k, &padded);
    if (padded && !c.exact_germ && !g.exact_germ) {
        std::cerr << "warning: " << path << " has order " << g.order << " < k+1 = " << k + 1
                  << "; padded with zeros, top-degree results may be truncation artifacts (pass --exact-germ if the "
                     "polynomials are the whole germ)\n";
    }
    return f;
}

void print(const report_json &j, const common &c)
{
    emit(std::cout, j, fmt(c));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"germlab: tangent spaces, moduli and invariants of map germs under A[G] and R x G"};
    app.require_subcommand(1);

    common c;
    std::string group_spec, subgroup_spec, germ, germ_a, germ_b, eq = "ag", pair = "ag-vs-rxg", kind, mode = "euclidean";
    unsigned k = 4;
    bool extended = false, ring = false, per_degree = false, constants = false, all = false;
    std::vector<std::string> suites, germs;
    std::vector<int> only;

    auto *gf = app.add_subcommand("gfields", "theta[G] jet spaces");
    gf->add_option("--group", group_spec, "Group spec, e.g. so:3")->required();
    gf->add_option("--jet-order", k, "Jet order k")->check(CLI::Range(1, 12));
    gf->add_flag("--ring", ring, "Also report the ring E_p[G] jet");
    gf->add_flag("--per-degree", per_degree, "List basis fields of every degree");
    gf->add_flag("--constants", constants, "Include constant fields (theta[G] instead of theta[G]_0)");
    add_common(gf, c, false);

    auto *rg = app.add_subcommand("ring", "Jet of the ring E_p[G]");
    rg->add_option("--group", group_spec)->required();
    rg->add_option("--jet-order", k)->check(CLI::Range(1, 12));
    add_common(rg, c, false);

    auto *tg = app.add_subcommand("tangent", "Tangent space and codimension");
    tg->add_option("--germ", germ)->required()->check(CLI::ExistingFile);
    tg->add_option("--group", group_spec)->required();
    tg->add_option("--eq", eq)->check(CLI::IsMember({"ag", "rxg"}));
    tg->add_option("--jet-order", k)->check(CLI::Range(1, 12));
    tg->add_flag("--extended", extended);
    add_common(tg, c, true);

    auto *md = app.add_subcommand("moduli", "Relative infinitesimal moduli space");
    md->add_option("--germ", germ)->required()->check(CLI::ExistingFile);
    md->add_option("--pair", pair)->check(CLI::IsMember({"ag-vs-rxg", "ag-vs-ah", "rxg-vs-rxh"}));
    md->add_option("--group", group_spec)->required();
    md->add_option("--subgroup", subgroup_spec);
    md->add_option("--jet-order", k)->check(CLI::Range(1, 12));
    md->add_flag("--extended", extended);
    add_common(md, c, true);

    auto *rd = app.add_subcommand("rigidity", "Linear-only check and its consequences on germs");
    rd->add_option("--group", group_spec)->required();
    rd->add_option("--jet-order", k)->check(CLI::Range(2, 12));
    rd->add_option("--germ", germs, "Germ files (default: fixtures with matching target dimension)");
    add_common(rd, c, true);

    auto *gr = app.add_subcommand("growth", "Codimension growth in the jet order");
    gr->add_option("--germ", germ)->required()->check(CLI::ExistingFile);
    gr->add_option("--group", group_spec)->required();
    gr->add_option("--eq", eq)->check(CLI::IsMember({"ag", "rxg"}));
    gr->add_option("--jet-order", k, "Largest order k_max")->check(CLI::Range(2, 12));
    gr->add_flag("--extended", extended);
    add_common(gr, c, true);

    auto *nf = app.add_subcommand("normal-form", "A_k or Monge normal form");
    nf->add_option("--germ", germ)->required()->check(CLI::ExistingFile);
    nf->add_option("--kind", kind)->required()->check(CLI::IsMember({"ak", "monge"}));
    add_common(nf, c, false);

    auto *iv = app.add_subcommand("invariants", "Curve invariants");
    iv->add_option("--germ", germ)->required()->check(CLI::ExistingFile);
    iv->add_option("--kind", kind)->required()->check(CLI::IsMember({"curvature", "frontal", "equiaffine"}));
    add_common(iv, c, false);

    auto *cg = app.add_subcommand("congruent", "Congruence test of two plane curves");
    cg->add_option("--germ-a", germ_a)->required()->check(CLI::ExistingFile);
    cg->add_option("--germ-b", germ_b)->required()->check(CLI::ExistingFile);
    cg->add_option("--mode", mode)->check(CLI::IsMember({"euclidean", "equiaffine"}));
    cg->add_option("--jet-order", k)->check(CLI::Range(1, 20));
    add_common(cg, c, false);

    auto *rp = app.add_subcommand("reproduce", "Run the acceptance suites");
    rp->add_option("suite", suites, "dims, moduli or geometry");
    rp->add_flag("--all", all);
    rp->add_option("--only", only, "Criterion ids");
    add_common(rp, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gf->parsed()) {
            const auto g = parse_group(group_spec);
            const auto fs = theta_g_jet(g, k, constants);
            auto j = to_json(fs, per_degree);
            if (ring) {
                j["ring"] = to_json(ring_eg_jet(g, k));
            }
            print(j, c);
        } else if (rg->parsed()) {
            print(to_json(ring_eg_jet(parse_group(group_spec), k)), c);
        } else if (tg->parsed()) {
            const auto f = load_for_order(germ, k, c);
            auto j = to_json(tangent(f, parse_group(group_spec), parse_equivalence(eq), k, extended));
            j["note"] = "identity component only";
            print(j, c);
        } else if (md->parsed()) {
            const auto f = load_for_order(germ, k, c);
            std::optional<group_id> h;
            if (!subgroup_spec.empty()) {
                h = parse_group(subgroup_spec);
            }
            print(to_json(moduli(f, parse_moduli_pair(pair), parse_group(group_spec), h, k, extended)), c);
        } else if (rd->parsed()) {
            const auto g = parse_group(group_spec);
            std::vector<std::pair<std::string, germ_jet>> samples;
            if (germs.empty()) {
                for (const auto &fx : load_fixtures()) {
                    if (fx.p == g.p()) {
                        samples.emplace_back(fx.name, germ_for_order(fx, k));
                    }
                }
            } else {
                for (const auto &path : germs) {
                    samples.emplace_back(load_germ_file(path).name, load_for_order(path, k, c));
                }
            }
            print(to_json(rigidity(g, k, samples)), c);
        } else if (gr->parsed()) {
            const auto f = load_for_order(germ, k, c);
            print(to_json(growth_probe(f, parse_group(group_spec), parse_equivalence(eq), k, extended)), c);
        } else if (nf->parsed()) {
            const auto g = load_germ_file(germ);
            const double t = tol_or(c, 1e-9);
            report_json j;
            if (kind == "ak") {
                const auto r = ak_normalize(g.germ);
                j = to_json(r);
                j["within_tol"] = r.residual <= t;
            } else {
                const auto r = monge_normal_form(g.germ);
                j = to_json(r);
                j["within_tol"] = r.residual <= t;
            }
            print(j, c);
        } else if (iv->parsed()) {
            const auto g = load_germ_file(germ);
            report_json j;
            if (kind == "curvature") {
                const auto pc = to_plane_curve(g.germ);
                j["curvature"] = series_json(curvature(pc));
                j["arclength"] = series_json(arclength(pc));
            } else if (kind == "frontal") {
                const auto n = ak_normalize(g.germ);
                j["normal_form"] = to_json(n);
                j["frontal"] = to_json(frontal(n));
            } else {
                const auto pc = to_plane_curve(g.germ);
                const auto e = equiaffine_curvature(pc);
                j["equiaffine_arclength"] = series_json(equiaffine_arclength(pc));
                j["curvature_in_sigma"] = series_json(e.in_sigma);
                j["curvature_in_t"] = series_json(e.in_t);
            }
            print(j, c);
        } else if (cg->parsed()) {
            const auto a = to_plane_curve(load_germ_file(germ_a).germ);
            const auto b = to_plane_curve(load_germ_file(germ_b).germ);
            const auto m = mode == "euclidean" ? congruence_mode::euclidean : congruence_mode::equiaffine;
            auto j = to_json(congruence_test(a, b, m, k, tol_or(c, 1e-6)));
            j["mode"] = mode;
            print(j, c);
        } else if (rp->parsed()) {
            std::vector<criterion_result> results;
            if (!only.empty()) {
                for (int id : only) {
                    results.push_back(run_criterion(id));
                }
            } else if (all || suites.empty()) {
                results = run_suite("all");
            } else {
                for (const auto &s : suites) {
                    auto r = run_suite(s);
                    results.insert(results.end(), r.begin(), r.end());
                }
            }
            report_json j;
            j["criteria"] = report_json::array();
            std::size_t passed = 0;
            for (const auto &r : results) {
                passed += r.passed ? 1 : 0;
                auto row = to_json(r);
                if (fmt(c) == output_format::table) {
                    row.erase("notes");
                    row.erase("title");
                }
                j["criteria"].push_back(row);
            }
            j["passed"] = passed;
            j["total"] = results.size();
            print(j, c);
        }
    } catch (const invariant_error &e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const user_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
