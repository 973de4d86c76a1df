#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>

#include "io.hpp"
#include "oort/asw.hpp"

using namespace oort;
using namespace oort::cli;

namespace {

std::vector<std::string> split(const std::string& s, char sep = ',')
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> rational_list(const std::string& s)
{
    std::vector<Rational> out;
    for (const auto& x : split(s)) {
        try {
            out.push_back(parse_rational(x));
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + x + "' as a rational");
        }
    }
    return out;
}

std::vector<std::int64_t> integer_list(const std::string& s)
{
    std::vector<std::int64_t> out;
    for (const auto& q : rational_list(s)) {
        if (!is_integer(q))
            throw UsageError("expected integers, got " + to_string(q));
        out.push_back(q.numerator());
    }
    return out;
}

int precision_from_env()
{
    const char* env = std::getenv("OORT_PRECISION");
    if (!env || !*env)
        return 0;
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n <= 0 || n > 4096)
        throw UsageError(std::string("OORT_PRECISION must be a positive integer, got '") + env + "'");
    return static_cast<int>(n);
}

void render(const json& j, const std::string& prefix, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            render(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); }) &&
               !std::all_of(j.begin(), j.end(), [](const json& x) {
                   return x.is_array() && std::none_of(x.begin(), x.end(), [](const json& y) { return y.is_structured(); });
               })) {
        for (size_t i = 0; i < j.size(); ++i)
            render(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::int64_t default_chi(int p, int n, int m)
{
    return default_character(p, n, m);
}

json verdict_json(const FiniteGroup& G, const KgbVerdict& v)
{
    return {{"group", G.name()},
            {"vanishes", v.vanishes},
            {"witness", v.witness ? bcd_json(G, *v.witness) : json(nullptr)},
            {"table", kgb_json(v.table)},
            {"subgroups", kgb_subgroups_json(G, v.table)}};
}

json witness_json(const FiniteGroup& G, const KatzGabberCover& kg, const SearchBounds& bounds)
{
    auto w = kgb_witness_search(G, kg, bounds);
    KgbVerdict v{w.has_value(), w, kgb_table(G, kg, w)};
    json out = verdict_json(G, v);
    out["balanced"] = v.balanced();
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ramification, lifting and Hurwitz tree computations over local fields"};
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the JSON payload");
    app.fallthrough();
    app.require_subcommand(1);
    std::function<json()> action;
    std::string command;
    auto bind = [&](CLI::App* sub, std::string name, std::function<json()> fn) {
        sub->callback([&, name, fn] {
            command = name;
            action = fn;
        });
    };

    // different
    auto* diff = app.add_subcommand("different", "Degree of the different of a ramification filtration");
    std::vector<std::string> cyclic;
    std::string filtration;
    auto* cyc_opt = diff->add_option("--cyclic", cyclic, "p and comma-separated upper jumps of Z/p^n")->expected(2);
    auto* fil_opt = diff->add_option("--filtration", filtration, "Filtration JSON, inline or as a file");
    cyc_opt->excludes(fil_opt);
    bind(diff, "different", [&]() -> json {
        if (!cyclic.empty()) {
            int p = static_cast<int>(integer_list(cyclic[0]).at(0));
            auto u = rational_list(cyclic[1]);
            Rational closed = cyclic_different(p, u);
            auto lower = herbrand_lower_from_upper(cyclic_upper_filtration(p, u));
            Rational brute(different_from_lower(lower));
            json lj = json::array();
            for (const auto& t : lower.jumps())
                lj.push_back(rational_json(t));
            json uj = json::array();
            for (const auto& t : u)
                uj.push_back(rational_json(t));
            return {{"p", p},
                    {"upper_jumps", uj},
                    {"lower_jumps", lj},
                    {"delta", rational_json(closed)},
                    {"closed_form", rational_json(closed)},
                    {"herbrand_sum", rational_json(brute)},
                    {"agree", closed == brute}};
        }
        if (filtration.empty())
            throw UsageError("give --cyclic p jumps or --filtration json");
        RamFiltration f = filtration_from_json(load_json(filtration));
        f.validate();
        RamFiltration lower = f.numbering == Numbering::lower ? f : herbrand_lower_from_upper(f);
        return {{"delta", rational_json(Rational(different_from_lower(lower)))}};
    });

    // kgb
    auto* kgb = app.add_subcommand("kgb", "KGB obstruction verdicts and witness search");
    kgb->require_subcommand(1);
    int kp = 0, kn = 1, km = 1;
    std::int64_t m1 = 0, m2 = 0, kh = 0, kchi = 0;
    SearchBounds bounds;
    auto* zpzp = kgb->add_subcommand("zpzp", "(Z/p)^2 with lower jumps m1 <= m2");
    zpzp->add_option("p", kp)->required();
    zpzp->add_option("m1", m1)->required();
    zpzp->add_option("m2", m2)->required();
    bind(zpzp, "kgb zpzp", [&]() -> json {
        auto v = kgb_zpzp(kp, m1, m2);
        return verdict_json(bicyclic_group(kp), v);
    });
    auto* meta = kgb->add_subcommand("meta", "Z/p^n x| Z/m with first lower jump h");
    for (auto* s : {meta}) {
        s->set_help_flag("--help", "Print this help message and exit");
        s->add_option("p", kp)->required();
        s->add_option("n", kn)->required();
        s->add_option("m", km)->required();
        s->add_option("h", kh)->required();
        s->add_option("--chi", kchi, "Action character; defaults to the smallest of order m");
    }
    bind(meta, "kgb meta", [&]() -> json {
        std::int64_t chi = kchi ? kchi : default_chi(kp, kn, km);
        auto v = kgb_metacyclic(kp, kn, km, chi, kh);
        return verdict_json(metacyclic_group(kp, kn, km, chi), v);
    });
    auto* witness = kgb->add_subcommand("witness", "Search for a balancing branch cycle description");
    witness->require_subcommand(1);
    witness->add_option("--max-points", bounds.max_points, "Largest tuple length tried");
    witness->add_option("--max-states", bounds.max_states, "Largest number of search states");
    auto* wz = witness->add_subcommand("zpzp", "(Z/p)^2 with lower jumps m1 <= m2");
    wz->add_option("p", kp)->required();
    wz->add_option("m1", m1)->required();
    wz->add_option("m2", m2)->required();
    bind(wz, "kgb witness zpzp", [&]() -> json {
        kgb_zpzp(kp, m1, m2);
        auto G = bicyclic_group(kp);
        return witness_json(G, bicyclic_cover(G, m1, m2), bounds);
    });
    auto* wm = witness->add_subcommand("meta", "Z/p^n x| Z/m with first lower jump h");
    wm->set_help_flag("--help", "Print this help message and exit");
    wm->add_option("p", kp)->required();
    wm->add_option("n", kn)->required();
    wm->add_option("m", km)->required();
    wm->add_option("h", kh)->required();
    wm->add_option("--chi", kchi, "Action character; defaults to the smallest of order m");
    bind(wm, "kgb witness meta", [&]() -> json {
        std::int64_t chi = kchi ? kchi : default_chi(kp, kn, km);
        auto G = metacyclic_group(kp, kn, km, chi);
        return witness_json(G, metacyclic_cover(G, kh), bounds);
    });

    // verify-lift
    auto* lift = app.add_subcommand("verify-lift", "Different criterion for explicit lifts");
    lift->require_subcommand(1);
    int lp = 0, lu = 0;
    std::string ljumps;
    auto* lzp = lift->add_subcommand("zp", "Z^p = 1 + lambda^p T^-u");
    auto* lzp2 = lift->add_subcommand("zp2", "The Z/p^2 lift with jumps (u, pu)");
    for (auto* s : {lzp, lzp2}) {
        s->add_option("p", lp)->required();
        s->add_option("u", lu)->required();
        s->add_option("--jumps", ljumps, "Special-fiber upper jumps to test against");
    }
    auto* ldih = lift->add_subcommand("dihedral", "The D_p example");
    ldih->add_option("p", lp)->required();
    int precision = 0;
    bind(lzp, "verify-lift zp", [&]() -> json {
        auto chain = build_zp_lift(lp, lu, precision);
        auto jumps = ljumps.empty() ? std::vector<std::int64_t>{lu} : integer_list(ljumps);
        return certificate_json(different_criterion(chain, jumps));
    });
    bind(lzp2, "verify-lift zp2", [&]() -> json {
        auto chain = build_zp2_lift(lp, lu, precision);
        auto jumps = ljumps.empty() ? std::vector<std::int64_t>{lu, std::int64_t(lp) * lu} : integer_list(ljumps);
        return certificate_json(different_criterion(chain, jumps));
    });
    bind(ldih, "verify-lift dihedral", [&]() -> json { return certificate_json(dihedral_example_check(lp, precision)); });

    // hurwitz
    auto* hur = app.add_subcommand("hurwitz", "Hurwitz trees");
    hur->require_subcommand(1);
    int hp = 0, hm = 0, hh = 0;
    std::int64_t hchi = 0;
    std::string hz, hfile;
    bool hdot = false;
    auto* hbuild = hur->add_subcommand("build", "Smooth tree of conductor h < p");
    hbuild->set_help_flag("--help", "Print this help message and exit");
    hbuild->add_option("p", hp)->required();
    hbuild->add_option("m", hm)->required();
    hbuild->add_option("h", hh)->required();
    hbuild->add_option("--z", hz, "Comma-separated orbit representatives in F_p^x")->required();
    hbuild->add_option("--chi", hchi, "chi(c); defaults to a generator of F_p^x to the (p-1)/m");
    bind(hbuild, "hurwitz build", [&]() -> json {
        std::int64_t chi = hchi;
        if (!chi) {
            if (!is_prime(hp) || hm < 1 || (hp - 1) % hm)
                throw DomainError("m must divide p - 1");
            const GaloisField& F = GaloisField::get(hp, 1);
            chi = Fq(F, F.generator()).pow((hp - 1) / hm).code();
        }
        auto t = build_small_conductor(hp, hm, hh, chi, integer_list(hz));
        return {{"tree", hurwitz_to_json(t)}, {"conductor", conductor(t)}, {"violations", json::array()}};
    });
    auto* hval = hur->add_subcommand("validate", "Check axioms (i) to (x)");
    hval->add_option("file", hfile)->required();
    hval->add_flag("--dot", hdot, "Also emit the tree in DOT");
    bind(hval, "hurwitz validate", [&]() -> json {
        auto t = hurwitz_from_json(load_json(hfile));
        auto bad = validate(t);
        json vs = json::array();
        for (const auto& v : bad)
            vs.push_back({{"axiom", v.axiom}, {"message", v.message}});
        json out{{"valid", bad.empty()}, {"conductor", conductor(t)}, {"violations", vs}};
        if (hdot)
            out["dot"] = to_dot(t);
        return out;
    });

    // stable-model
    auto* stable = app.add_subcommand("stable-model", "Stable model of a marked open unit disc");
    std::string sfile;
    bool sdot = false;
    stable->add_option("file", sfile)->required();
    stable->add_flag("--dot", sdot, "Also emit the special fiber in DOT");
    bind(stable, "stable-model", [&]() -> json {
        auto tree = cluster_tree_from_json(load_json(sfile), precision);
        json out = cluster_tree_json(tree);
        if (sdot)
            out["dot"] = to_dot(tree);
        return out;
    });

    // depth
    auto* depth = app.add_subcommand("depth", "Depth of Z^p = f along disc radii");
    std::string dfile, dradii;
    depth->add_option("file", dfile)->required();
    depth->add_option("--radii", dradii, "Comma-separated increasing radii")->required();
    bind(depth, "depth", [&]() -> json {
        auto in = depth_input_from_json(load_json(dfile), precision);
        auto prof = depth_profile_check(in.f, rational_list(dradii));
        json samples = json::array();
        for (const auto& [r, d] : prof.samples)
            samples.push_back({{"r", rational_json(r)}, {"depth", rational_json(d)}});
        json slopes = json::array();
        for (const auto& s : prof.slopes)
            slopes.push_back(rational_json(s));
        return {{"samples", samples}, {"slopes", slopes}, {"nu", prof.nu}, {"consistent", prof.consistent}};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto fail = [&](const char* kind, const std::string& message, int code) {
        if (as_json)
            std::cout << json{{"status", "error"}, {"error", kind}, {"command", command}, {"message", message}}.dump(2)
                      << "\n";
        std::cerr << "error: " << message << "\n";
        return code;
    };
    try {
        precision = precision_from_env();
        json result = action();
        if (as_json)
            std::cout << json{{"status", "ok"}, {"command", command}, {"result", result}}.dump(2) << "\n";
        else
            render(result, "", std::cout);
        return 0;
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 1);
    }
}
