// Command-line front end: coefficient tables, open potentials and the
// verification suites. Exit status 0 when everything passes, 1 on a failed
// comparison, 2 on a usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "ogw/checks.hpp"
#include "ogw/json_io.hpp"

namespace {

struct Options {
    int max_winding = 4;
    int max_boundary = 4;
    int order = 12;
    int degree = 6;
    int max_tree_edges = 4;
    int max_label = 3;
    int z_order = 8;
    int max_w = 4;
    int max_genus = 5;
    int max_i = 5;
    int n = 10;
    int upto = 9;
    int max_d = 5;
    int max_k = 4;
    int orb_max_d = 8;
    std::uint64_t seed = ogw::checks::kDefaultSeed;
    std::string format = "text";
    std::string out;
    std::string target;
    std::string check;
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw ogw::PreconditionError("cannot open output file");
    f << text;
}

std::string render(const Options& o, const ogw::Report& r)
{
    if (o.format == "json")
        return r.to_json().dump(2) + "\n";
    if (o.format == "csv")
        return r.to_csv();
    return r.to_text() + (r.all_pass() ? "ALL PASS\n" : "FAILED\n");
}

std::string render(const Options& o, const ogw::TruncSeries& s, const std::string& analytic_name)
{
    if (o.format == "json")
        return ogw::series_json(s, analytic_name).dump(2) + "\n";
    if (o.format == "csv")
        return ogw::series_csv(s, analytic_name);
    return ogw::series_text(s, analytic_name);
}

int run_hodge(const Options& o)
{
    auto rows = ogw::hodge::table(o.max_genus, o.max_i);
    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            j.push_back({{"g", r.g}, {"i", r.i}, {"m", r.m}, {"value", r.value.str()}});
        text = j.dump(2) + "\n";
    } else {
        text = o.format == "csv" ? "g,i,m,value\n" : "";
        for (const auto& r : rows) {
            std::string m;
            for (std::size_t k = 0; k < r.m.size(); ++k)
                m += (k ? " " : "") + std::to_string(r.m[k]);
            if (o.format == "csv")
                text += std::to_string(r.g) + "," + std::to_string(r.i) + "," + m + "," + r.value.str() + "\n";
            else
                text += "L(g=" + std::to_string(r.g) + ", i=" + std::to_string(r.i) + ", m=[" + m + "]) = " + r.value.str() + "\n";
        }
    }
    emit(o, text);
    return 0;
}

int run_gtable(const Options& o)
{
    auto rows = ogw::checks::gtable(o.n, o.upto);
    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < rows.size(); ++n) {
            nlohmann::ordered_json c = nlohmann::ordered_json::array();
            for (const auto& r : rows[n])
                c.push_back(r.str());
            j.push_back({{"n", n + 1}, {"coefficients", c}});
        }
        text = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        text = "n,k,value\n";
        for (std::size_t n = 0; n < rows.size(); ++n)
            for (std::size_t k = 0; k < rows[n].size(); ++k)
                text += std::to_string(n + 1) + "," + std::to_string(k) + "," + rows[n][k].str() + "\n";
    } else {
        for (std::size_t n = 0; n < rows.size(); ++n) {
            text += "G^" + std::to_string(n + 1) + ":";
            for (const auto& r : rows[n])
                text += " " + r.str();
            text += "\n";
        }
    }
    emit(o, text);
    return 0;
}

int run_potential(const Options& o)
{
    if (o.target == "resolution") {
        ogw::Caps caps{std::max(o.order, 4), o.max_winding, o.max_boundary, o.degree};
        emit(o, render(o, ogw::open_potential_resolution(caps).expand(caps), "x"));
    } else {
        ogw::Caps caps{o.order, o.max_winding, o.max_boundary, 0};
        emit(o, render(o, ogw::open_potential_orbifold(caps), "z"));
    }
    return 0;
}

ogw::Report run_one_check(const Options& o, const std::string& name)
{
    using namespace ogw;
    if (name == "tphi")
        return checks::tphi(o.max_genus, o.max_i);
    if (name == "gluing") {
        Report r = checks::gluing(o.max_d, o.max_k, o.seed);
        r.merge(checks::g_lemma(10));
        return r;
    }
    if (name == "orb-gluing")
        return checks::orb_gluing(o.orb_max_d);
    if (name == "routes")
        return checks::routes(Caps{o.order, o.max_winding, o.max_boundary, o.degree});
    if (name == "ocrc")
        return verify_open_crc(Caps{o.order, o.max_winding, o.max_boundary, 0});
    if (name == "ccrc")
        return verify_closed_crc({o.max_tree_edges, o.max_label, o.z_order, o.degree, o.max_w});
    Report all;
    for (const char* n : {"tphi", "gluing", "orb-gluing", "routes", "ocrc", "ccrc"})
        all.merge(run_one_check(o, n));
    return all;
}

int run_check(const Options& o)
{
    ogw::Report r = run_one_check(o, o.check);
    emit(o, render(o, r));
    return r.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact open and closed Gromov-Witten potentials and crepant resolution checks"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        c->add_option("--out", o.out, "write to this file instead of standard output");
    };
    auto add_caps = [&](CLI::App* c) {
        c->add_option("--max-winding", o.max_winding, "largest winding degree")->check(CLI::PositiveNumber);
        c->add_option("--max-boundary", o.max_boundary, "most boundary components")->check(CLI::PositiveNumber);
        c->add_option("--order", o.order, "exclusive bound on the analytic exponent")->check(CLI::Range(4, 64));
        c->add_option("--degree", o.degree, "largest degree-variable exponent")->check(CLI::PositiveNumber);
    };

    auto* hodge = app.add_subcommand("hodge", "table of two-part hyperelliptic Hodge integrals");
    hodge->add_option("--max-genus", o.max_genus)->check(CLI::Range(1, 12));
    hodge->add_option("--max-i", o.max_i)->check(CLI::Range(1, 12));
    add_format(hodge);

    auto* gtable = app.add_subcommand("gtable", "coefficients of powers of G");
    gtable->add_option("--n", o.n, "largest power")->check(CLI::Range(1, 200));
    gtable->add_option("--upto", o.upto, "largest X exponent")->check(CLI::Range(0, 200));
    add_format(gtable);

    auto* potential = app.add_subcommand("potential", "open potential coefficient table");
    potential->add_option("target", o.target, "resolution or orbifold")
        ->required()
        ->check(CLI::IsMember({"resolution", "orbifold"}));
    add_caps(potential);
    add_format(potential);

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", o.check, "tphi, gluing, orb-gluing, routes, ocrc, ccrc or all")
        ->required()
        ->check(CLI::IsMember({"tphi", "gluing", "orb-gluing", "routes", "ocrc", "ccrc", "all"}));
    add_caps(check);
    add_format(check);
    check->add_option("--max-tree-edges", o.max_tree_edges)->check(CLI::PositiveNumber);
    check->add_option("--max-label", o.max_label, "largest tree edge label")->check(CLI::PositiveNumber);
    check->add_option("--z-order", o.z_order, "Z-order of the closed check")->check(CLI::PositiveNumber);
    check->add_option("--max-w", o.max_w, "largest W exponent in expanded tree series")->check(CLI::NonNegativeNumber);
    check->add_option("--max-genus", o.max_genus)->check(CLI::Range(1, 12));
    check->add_option("--max-i", o.max_i)->check(CLI::Range(1, 12));
    check->add_option("--max-d", o.max_d, "largest winding in gluing sweeps")->check(CLI::PositiveNumber);
    check->add_option("--max-k", o.max_k, "largest k in the smooth gluing sweep")->check(CLI::PositiveNumber);
    check->add_option("--seed", o.seed, "seed of the sampled edge weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }
    if (check->parsed() && check->count("--max-d") == 0)
        o.orb_max_d = 8;
    else
        o.orb_max_d = o.max_d;

    try {
        if (hodge->parsed())
            return run_hodge(o);
        if (gtable->parsed())
            return run_gtable(o);
        if (potential->parsed())
            return run_potential(o);
        return run_check(o);
    } catch (const ogw::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
