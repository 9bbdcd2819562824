// Command-line front end: fusion, ring, weights, ode, connection, df, verify.
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.

#include "swm/acceptance.hpp"
#include "swm/swm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>

using json = nlohmann::json;
using namespace swm;

namespace
{

    struct Common
    {
        int m = 1;
        int precision = 128;
        int terms = 0; // 0: subcommand default
        double tol = 0;
        std::string format = "json";
        unsigned seed = 2024;
    };

    json rational_json(const Rational &q)
    {
        return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
    }

    json complex_json(const cplx &z) { return {{"re", z.real()}, {"im", z.imag()}}; }

    json rationals_json(const std::vector<Rational> &v)
    {
        json a = json::array();
        for (const auto &q : v)
            a.push_back(rational_json(q));
        return a;
    }

    json matrix_json(const Eigen::Matrix4d &M)
    {
        json a = json::array();
        for (int i = 0; i < 4; ++i)
        {
            json row = json::array();
            for (int j = 0; j < 4; ++j)
                row.push_back(M(i, j));
            a.push_back(row);
        }
        return a;
    }

    json element_json(const FusionElement &e)
    {
        return {{"class", e.to_string()}, {"multiplicities", e.mult}};
    }

    std::string scalar_text(const json &v)
    {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_object() && v.contains("num") && v.contains("den") && v.size() == 2)
        {
            const std::string d = v["den"].get<std::string>();
            return v["num"].get<std::string>() + (d == "1" ? "" : "/" + d);
        }
        if (v.is_object() && v.contains("re") && v.contains("im") && v.size() == 2)
            return v["re"].dump() + (v["im"].get<double>() < 0 ? " - " : " + ") +
                   json(std::abs(v["im"].get<double>())).dump() + "i";
        return v.dump();
    }

    bool is_scalarish(const json &v)
    {
        return !v.is_structured() || (v.is_object() && v.size() == 2 &&
                                      ((v.contains("num") && v.contains("den")) || (v.contains("re") && v.contains("im"))));
    }

    void render_md(std::ostream &os, const json &v, const std::string &key, int depth)
    {
        const std::string hashes(std::min(depth, 6), '#');
        if (is_scalarish(v))
        {
            os << "- **" << key << "**: " << scalar_text(v) << "\n";
            return;
        }
        if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalarish))
        {
            os << "- **" << key << "**: ";
            for (size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << scalar_text(v[i]);
            os << "\n";
            return;
        }
        os << "\n" << hashes << " " << key << "\n\n";
        if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json &r) { return r.is_array(); }))
        {
            size_t cols = 0;
            for (const auto &r : v)
                cols = std::max(cols, r.size());
            os << "|";
            for (size_t j = 0; j < cols; ++j)
                os << " " << j << " |";
            os << "\n|";
            for (size_t j = 0; j < cols; ++j)
                os << "---|";
            os << "\n";
            for (const auto &r : v)
            {
                os << "|";
                for (const auto &c : r)
                    os << " " << scalar_text(c) << " |";
                os << "\n";
            }
            return;
        }
        if (v.is_array())
        {
            for (size_t i = 0; i < v.size(); ++i)
                render_md(os, v[i], key + "[" + std::to_string(i) + "]", depth + 1);
            return;
        }
        for (const auto &[k, x] : v.items())
            render_md(os, x, k, depth + 1);
    }

    void emit(const json &doc, const std::string &format)
    {
        if (format == "md")
        {
            std::ostringstream os;
            os << "# swm " << doc["command"]["subcommand"].get<std::string>() << "\n\n";
            for (const auto &[k, x] : doc.items())
                if (k != "command")
                    render_md(os, x, k, 2);
            std::cout << os.str();
        }
        else
            std::cout << doc.dump(2) << "\n";
    }

    json command_echo(const std::string &sub, const Common &c, json extra = json::object())
    {
        json e = {{"subcommand", sub}, {"m", c.m}};
        for (const auto &[k, v] : extra.items())
            e[k] = v;
        return e;
    }

    // ---------- subcommands ----------

    int cmd_fusion(const Common &c, bool table, const std::string &a, const std::string &b)
    {
        json doc = {{"schema_version", "1"}};
        json results;
        if (!a.empty() || !b.empty())
        {
            if (a.empty() || b.empty())
                throw CLI::ValidationError("fusion", "--a and --b must be given together");
            const auto la = parse_label(a, c.m), lb = parse_label(b, c.m);
            results["product"] = element_json(fuse(la, lb));
            doc["command"] = command_echo("fusion", c, {{"a", a}, {"b", b}});
        }
        else
        {
            (void)table; // the table is the default output
            const auto B = basis_labels(c.m);
            json names = json::array(), rows = json::array();
            for (const auto &L : B)
                names.push_back(L.name());
            for (const auto &L : B)
            {
                json row = json::array();
                for (const auto &R : B)
                    row.push_back(fuse(L, R).to_string());
                rows.push_back(row);
            }
            results["basis"] = names;
            results["table"] = rows;
            doc["command"] = command_echo("fusion", c, {{"table", true}});
        }
        doc["results"] = results;
        doc["status"] = {{"ok", true}};
        emit(doc, c.format);
        return 0;
    }

    int cmd_ring(const Common &c, const std::string &kind)
    {
        json doc = {{"schema_version", "1"}, {"command", command_echo("ring", c, {{"kind", kind}})}};
        json results;
        const int m = c.m;
        const RankReport rk = ring_ranks(m);
        json basis = json::array();
        if (kind == "P")
        {
            results["presentation"] = "Z[X]/(U_" + std::to_string(4 * m + 1) + " - 2U_" + std::to_string(2 * m) + ")";
            for (int k = 0; k <= 4 * m; ++k)
                basis.push_back({{"U", k}, {"class", from_reduced(ChebyshevPoly::basis(k), m).to_string()}});
            results["rank"] = rk.p_rank;
            results["unimodular"] = rk.p_ok;
        }
        else
        {
            results["presentation"] =
                "Z[X]/(U_" + std::to_string(2 * m + 1) + " - U_" + std::to_string(2 * m - 1) + " - 2)";
            for (int k = 0; k <= 2 * m; ++k)
                basis.push_back({{"U", k}, {"class", "X_" + std::to_string(k + 1)}});
            results["rank"] = rk.k_rank;
            results["unimodular"] = rk.k_ok;
        }
        results["reduced_basis"] = basis;
        doc["results"] = results;
        const bool ok = kind == "P" ? rk.p_ok : rk.k_ok;
        doc["status"] = {{"ok", ok}};
        emit(doc, c.format);
        return ok ? 0 : 1;
    }

    int cmd_weights(const Common &c, int nmax)
    {
        const int m = c.m;
        json doc = {{"schema_version", "1"}, {"command", command_echo("weights", c, {{"nmax", nmax}})}};
        json results;
        results["central_charge"] = rational_json(central_charge(m));
        results["zhu_dimension"] = zhu_dimension(m);
        json simples = json::array(), projs = json::array();
        for (int s = 1; s <= 2 * m + 1; ++s)
        {
            const auto L = ModuleLabel::X(s, m);
            json dec = json::array();
            for (const auto &e : ns_decomposition(L, nmax))
                dec.push_back({{"multiplicity", e.multiplicity}, {"weight", rational_json(e.weight)}});
            simples.push_back({{"label", L.name()}, {"min_weight", rational_json(min_weight(L))}, {"block", block_of(L)},
                               {"decomposition", dec}});
        }
        for (int s = 1; s <= 2 * m; ++s)
        {
            const auto P = ModuleLabel::P(s, m);
            json layers = json::array();
            for (const auto &layer : socle_series(P).layers)
            {
                json l = json::array();
                for (const auto &L : layer)
                    l.push_back(L.name());
                layers.push_back(l);
            }
            projs.push_back({{"label", P.name()}, {"block", block_of(P)}, {"socle_series", layers}});
        }
        results["simples"] = simples;
        results["projectives"] = projs;
        const auto rs = riemann_exponents(m);
        results["riemann_scheme"] = {{"at_0", rationals_json(rs.at0)}, {"at_1", rationals_json(rs.at1)},
                                     {"at_infinity", rationals_json(rs.atinf)}};
        doc["results"] = results;
        doc["status"] = {{"ok", true}};
        emit(doc, c.format);
        return 0;
    }

    int cmd_ode(const Common &c)
    {
        const int m = c.m;
        const int terms = c.terms ? c.terms : 64;
        json doc = {{"schema_version", "1"}, {"command", command_echo("ode", c, {{"terms", terms}})}};
        json results;
        const auto op = build_operator(m);
        json coeffs;
        for (int j = 0; j <= 3; ++j)
            coeffs["p" + std::to_string(j)] = rationals_json(op.p[j]);
        results["operator"] = coeffs;
        const auto rs = riemann_exponents(m);
        auto sorted = [](std::vector<Rational> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        const auto e0 = indicial_exponents(op, SingularPoint::Zero);
        const auto e1 = indicial_exponents(op, SingularPoint::One);
        const auto ei = indicial_exponents(op, SingularPoint::Infinity);
        const bool scheme_ok = e0 == sorted(rs.at0) && e1 == sorted(rs.at1) && ei == sorted(rs.atinf);
        results["indicial_exponents"] = {{"at_0", rationals_json(e0)}, {"at_1", rationals_json(e1)},
                                         {"at_infinity", rationals_json(ei)}};
        json sols = json::array();
        bool nolog = true, remainder_ok = true;
        for (int base : {0, 1})
            for (const auto &e : characteristic_exponents(m))
            {
                const auto sol = frobenius_series(op, base, e, terms, false);
                const int rem = lowest_remainder_order(op, sol);
                nolog = nolog && sol.log_residual == 0;
                remainder_ok = remainder_ok && (rem < 0 || rem >= terms - 3);
                sols.push_back({{"base_point", base},
                                {"exponent", rational_json(e)},
                                {"resonant_order", sol.resonant_order},
                                {"log_residual", rational_json(sol.log_residual)},
                                {"lowest_remainder_order", rem}});
            }
        results["frobenius"] = sols;
        doc["results"] = results;
        const bool ok = scheme_ok && nolog && remainder_ok;
        doc["status"] = {{"ok", ok}, {"scheme_matches", scheme_ok}, {"no_log", nolog}, {"remainder_order_ok", remainder_ok}};
        emit(doc, c.format);
        return ok ? 0 : 1;
    }

    int cmd_connection(const Common &c, double point)
    {
        ConnectionConfig cfg;
        cfg.n_terms = c.terms ? c.terms : 400;
        cfg.precision_bits = c.precision;
        cfg.matching_point = point;
        if (c.tol > 0)
            cfg.tolerance = c.tol;
        json doc = {{"schema_version", "1"},
                    {"command", command_echo("connection", c,
                                             {{"terms", cfg.n_terms}, {"precision", cfg.precision_bits}, {"point", point},
                                              {"tol", cfg.tolerance}})}};
        const ConnectionResult r = connection_matrix(c.m, cfg);
        json results;
        results["numeric_matrix"] = matrix_json(r.numeric_matrix);
        results["paper_matrix"] = matrix_json(r.paper_matrix);
        results["c"] = connection_c(c.m);
        results["condition_estimate"] = r.condition;
        results["cross_ratio_residual"] = r.cross_ratio_residual;
        results["zero_pattern_ok"] = r.zero_pattern_ok;
        results["alternate_basis"] = {{"found", r.gauge.found},
                                      {"fit_residual", r.gauge.residual},
                                      {"gauge_determinant", r.gauge.normalized_det},
                                      {"cross_ratio_residual", r.alt_cross_ratio_residual},
                                      {"zero_pattern_ok", r.alt_zero_pattern_ok},
                                      {"matrix", matrix_json(r.gauge.N_alt)}};
        results["transposed_paper_matrix_fits"] = r.transposed_gauge.found;
        results["basis_used"] = r.basis_used;
        const auto sub = reduced_subspace_check(c.m);
        results["reduced_subspace_ok"] = sub.ok;
        const auto M = paper_connection_matrix(c.m);
        results["paper_matrix_involutory"] = sym_is_identity(sym_mul(M, M));
        doc["results"] = results;
        const bool ok = r.pass && sub.ok;
        doc["status"] = {{"ok", ok}};
        emit(doc, c.format);
        return ok ? 0 : 1;
    }

    std::map<std::string, double> parse_params(const std::string &s)
    {
        std::map<std::string, double> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--params", "expected key=value pairs");
            try
            {
                out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            }
            catch (const std::exception &)
            {
                throw CLI::ValidationError("--params", "bad number in '" + item + "'");
            }
        }
        return out;
    }

    int cmd_df(const Common &c, const std::string &region_txt, const std::string &params_txt, int levels)
    {
        const RegionSpec region = parse_region(region_txt);
        auto p = parse_params(params_txt);
        auto get = [&](const char *k, double def) { return p.count(k) ? p[k] : def; };
        DFParams dp;
        bool constrained = p.count("rho") > 0;
        if (constrained)
        {
            dp = DFParams::constrained(get("a", -0.3), get("b", get("a", -0.3)), get("rho", 2.0));
            if (p.count("gamma"))
                dp.gamma = get("gamma", 1.0);
        }
        else
        {
            dp.a1 = get("a1", -0.3);
            dp.a2 = get("a2", -0.3);
            dp.b1 = get("b1", -0.3);
            dp.b2 = get("b2", -0.3);
            dp.gamma = get("gamma", 0.0);
        }
        json params = {{"a1", dp.a1.real()}, {"a2", dp.a2.real()}, {"b1", dp.b1.real()}, {"b2", dp.b2.real()},
                       {"gamma", dp.gamma.real()}};
        json doc = {{"schema_version", "1"},
                    {"command", command_echo("df", c, {{"region", region.name()}, {"params", params}, {"levels", levels}})}};
        DFConfig cfg;
        cfg.levels = levels;
        json results;
        const auto locus = on_singular_locus(dp);
        results["singular_locus"] = {{"on_locus", locus.on_locus}, {"violated", locus.violated}};
        const auto one = LaurentPoly2<cplx>::constant(1.0, 0);
        BoxIntegrand in;
        std::tie(in.U, in.V) = j_box(region);
        in.ufac = {{0.0, dp.a1}, {1.0, dp.b1}};
        in.vfac = {{0.0, dp.a2}, {1.0, dp.b2}};
        in.terms = box_terms(one);
        in.gamma = dp.gamma;
        const DFValue v = df_box_estimate(in, cfg);
        results["value"] = complex_json(v.value);
        results["error_estimate"] = v.error_estimate;
        if (constrained && region.sign == Sign::Plus && region.i == 0 && region.j == 0 && dp.gamma == cplx(1.0))
        {
            const cplx ex = forrester_closed_form(get("a", -0.3), get("b", get("a", -0.3)), get("rho", 2.0));
            results["closed_form"] = complex_json(ex);
            results["modulus_residual"] = std::abs(std::abs(v.value) - std::abs(ex)) / std::abs(ex);
        }
        else if (dp.gamma == cplx(0.0) && region.i != region.j)
        {
            const cplx ex = beta_degeneration(region, dp.a1, dp.a2, dp.b1, dp.b2);
            results["closed_form"] = complex_json(ex);
            results["modulus_residual"] = std::abs(std::abs(v.value) - std::abs(ex)) / std::abs(ex);
        }
        doc["results"] = results;
        doc["status"] = {{"ok", true}};
        emit(doc, c.format);
        return 0;
    }

    int cmd_verify(const Common &c)
    {
        acceptance::Scope scope;
        scope.m = c.m;
        scope.seed = c.seed;
        const auto res = acceptance::run_all(scope);
        json doc = {{"schema_version", "1"}, {"command", command_echo("verify", c, {{"seed", c.seed}})}};
        json crit = json::array();
        bool all = true;
        for (const auto &r : res)
        {
            if (r.applicable)
                all = all && r.pass;
            crit.push_back({{"id", r.id},
                            {"title", r.title},
                            {"applicable", r.applicable},
                            {"pass", r.pass},
                            {"detail", r.detail}});
        }
        doc["results"] = {{"criteria", crit}};
        doc["status"] = {{"ok", all}};
        emit(doc, c.format);
        return all ? 0 : 1;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"SW(m) fusion rings, Fuchsian connection data and Dotsenko-Fateev integrals"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--m", c.m, "parameter m >= 1")->check(CLI::PositiveNumber);
        sub->add_option("--precision", c.precision, "working precision in bits (>= 53)")->check(CLI::Range(53, 100000));
        sub->add_option("--terms", c.terms, "number of series terms (>= 16)")->check(CLI::Range(16, 1000000));
        sub->add_option("--tol", c.tol, "tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "md"}));
        sub->add_option("--seed", c.seed, "seed for randomized checks");
    };

    bool table = false;
    std::string fa, fb;
    auto *fusion = app.add_subcommand("fusion", "fusion products of basis classes");
    add_common(fusion);
    fusion->add_flag("--table", table, "full multiplication table (default)");
    fusion->add_option("--a", fa, "left factor, e.g. X_2");
    fusion->add_option("--b", fb, "right factor, e.g. P_1");

    std::string kind = "P";
    auto *ring = app.add_subcommand("ring", "quotient-ring presentation and reduced basis");
    add_common(ring);
    ring->add_option("--kind", kind, "P (fusion ring) or K (Grothendieck ring)")->check(CLI::IsMember({"P", "K"}));

    int nmax = 2;
    auto *weights = app.add_subcommand("weights", "central charge, weights, blocks, socles, Riemann scheme");
    add_common(weights);
    weights->add_option("--nmax", nmax, "decomposition depth")->check(CLI::NonNegativeNumber);

    auto *ode = app.add_subcommand("ode", "Fuchsian operator, indicial exponents, Frobenius data");
    add_common(ode);

    double point = 0.5;
    auto *conn = app.add_subcommand("connection", "numeric connection matrix compared with the exact matrix");
    add_common(conn);
    conn->add_option("--point", point, "matching point in (0,1)")->check(CLI::Range(0.0, 1.0));

    std::string region = "+00", params;
    int levels = 5;
    auto *df = app.add_subcommand("df", "Dotsenko-Fateev integral over a J-region with F = 1");
    add_common(df);
    df->add_option("--region", region, "region, e.g. +00, -11, +01");
    df->add_option("--params", params, "a=..,b=..,rho=..[,gamma=..] or a1=..,a2=..,b1=..,b2=..,gamma=..");
    df->add_option("--levels", levels, "quadrature levels (>= 3)")->check(CLI::Range(3, 8));

    auto *verify = app.add_subcommand("verify", "acceptance criteria applicable at --m");
    add_common(verify);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        std::cout << app.help();
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try
    {
        if (*fusion)
            return cmd_fusion(c, table, fa, fb);
        if (*ring)
            return cmd_ring(c, kind);
        if (*weights)
            return cmd_weights(c, nmax);
        if (*ode)
            return cmd_ode(c);
        if (*conn)
            return cmd_connection(c, point);
        if (*df)
            return cmd_df(c, region, params, levels);
        if (*verify)
            return cmd_verify(c);
    }
    catch (const CLI::ValidationError &e)
    {
        std::cerr << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        json doc = {{"schema_version", "1"}, {"status", {{"ok", false}, {"error", e.what()}}}};
        std::cout << doc.dump(2) << "\n";
        return 1;
    }
    return 2;
}
