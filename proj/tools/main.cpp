// Command-line front end: every verification suite and search is reachable
// as a subcommand, with human-readable output by default and a single JSON
// document on --json.  Exit code 0 = ok, 1 = a verification failed,
// 2 = usage or input error.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twothree/classforms.hpp"
#include "twothree/descent.hpp"
#include "twothree/identities.hpp"
#include "twothree/lehmer.hpp"
#include "twothree/report.hpp"
#include "twothree/ring.hpp"
#include "twothree/search.hpp"

namespace {

using namespace twothree;
using nlohmann::json;

struct Output {
    bool json_mode = false;
    CommandReport report;

    void line(const std::string& text) const {
        if (!json_mode) std::cout << text << "\n";
    }
    void add(json result) { report.results.push_back(std::move(result)); }
};

std::string fmt_double(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

const CLI::Validator kBigInt{[](std::string& s) -> std::string {
                                 if (s.empty()) return "empty integer";
                                 size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
                                 if (i == s.size()) return "not an integer: " + s;
                                 for (; i < s.size(); ++i)
                                     if (!std::isdigit(static_cast<unsigned char>(s[i])))
                                         return "not an integer: " + s;
                                 return {};
                             },
                             "BIGINT"};

json tuple_json(const CandidateTuple& t) {
    return json{{"n", t.n.get_str()},
                {"x", t.x.get_str()},
                {"y", t.y.get_str()},
                {"l", t.l.get_str()},
                {"m", t.m.get_str()}};
}

// ---- verify table1 ----------------------------------------------------

void run_table1(Output& out) {
    const RegistryReport reg = verify_table1();
    for (const RegistryCheck& check : reg.checks) {
        out.add(json{{"s", check.entry.s},
                     {"r", check.entry.r},
                     {"q", check.entry.q},
                     {"label", check.entry.label},
                     {"pair_valid", check.pair_valid},
                     {"defective", check.defect.defective},
                     {"l_value", check.defect.l_value.get_str()},
                     {"stripped", check.defect.stripped.get_str()},
                     {"twist_invariant", check.twist_invariant},
                     {"ok", check.ok()}});
        std::ostringstream line;
        line << (check.ok() ? "ok   " : "FAIL ") << "s=" << check.entry.s << " (R,Q)=("
             << check.entry.r << "," << check.entry.q << ") " << check.entry.label
             << "  L_s=" << check.defect.l_value.get_str();
        out.line(line.str());
    }
    out.line(reg.all_ok ? "all 26 registry entries defective, twists invariant"
                        : "registry verification FAILED");
}

// ---- verify lemmas -----------------------------------------------------

void run_lemmas(Output& out, unsigned t_max, unsigned samples, std::uint64_t seed) {
    const SumsLemmaReport sums = verify_sums_lemma(t_max);
    unsigned bad = 0;
    for (const SumsLemmaRow& row : sums.rows)
        if (!row.ok) ++bad;
    out.add(json{{"check", "binomial-sums"},
                 {"t_max", t_max},
                 {"rows", sums.rows.size()},
                 {"failures", bad},
                 {"ok", sums.ok}});
    out.line("binomial sums: " + std::to_string(sums.rows.size()) + " odd t checked, " +
             (sums.ok ? "all exact" : std::to_string(bad) + " FAILED"));

    for (const ExpansionBatchReport& batch : run_all_expansion_samples(samples, seed)) {
        out.add(json{{"check", "expansion"},
                     {"kind", expansion_kind_name(batch.kind)},
                     {"samples", batch.samples},
                     {"failures", batch.failures},
                     {"seed", batch.seed},
                     {"ok", batch.ok}});
        out.line(std::string("expansion ") + expansion_kind_name(batch.kind) + ": " +
                 std::to_string(batch.samples) + " samples, " +
                 (batch.ok ? "all exact" : std::to_string(batch.failures) + " FAILED"));
    }
}

// ---- verify classfacts --------------------------------------------------

void run_classfacts(Output& out, const ClassFactsLimits& limits) {
    const ClassFactsReport facts = verify_class_facts(limits);
    out.add(json{{"check", "class-facts"},
                 {"n_limit", limits.n_limit},
                 {"wn_limit", limits.wn_limit},
                 {"wn_limit_small", limits.wn_limit_small},
                 {"wang_wang_checked", facts.wang_wang_checked},
                 {"field_bound_checked", facts.field_bound_checked},
                 {"g_checked", facts.g_checked},
                 {"bound_checked", facts.bound_checked},
                 {"violations", facts.violations.size()},
                 {"ok", facts.ok}});
    for (const ClassFactsViolation& v : facts.violations) {
        out.add(json{{"violation", v.check}, {"value", v.value.get_str()},
                     {"detail", v.detail}, {"ok", false}});
        out.line("VIOLATION " + v.check + " at " + v.value.get_str() + ": " + v.detail);
    }
    std::ostringstream line;
    line << "class facts: h(-4n)<n on " << facts.wang_wang_checked << " n, field caps on "
         << facts.field_bound_checked << " fields, bound/monotonicity on "
         << facts.g_checked << "+" << facts.bound_checked << " samples -> "
         << (facts.ok ? "ok" : "FAILED");
    out.line(line.str());
}

// ---- verify residues ----------------------------------------------------

void run_residues(Output& out) {
    for (const ResidueSuiteReport& suite : residue_checks()) {
        out.add(json{{"check", suite.name},
                     {"grid", suite.grid_size},
                     {"violations", suite.violations},
                     {"notes", suite.notes},
                     {"ok", suite.ok}});
        out.line(suite.name + ": grid " + std::to_string(suite.grid_size) + ", " +
                 (suite.ok ? "ok" : std::to_string(suite.violations) + " violations"));
    }
}

// ---- lehmer -------------------------------------------------------------

void run_lehmer(Output& out, const Int& r, const Int& q, unsigned s, bool defect) {
    const LehmerPair pair{r, q};
    const Int l = lehmer_number(pair, s);
    const Int c = companion_number(pair, s);
    json result{{"r", r.get_str()}, {"q", q.get_str()}, {"s", s},
                {"l_value", l.get_str()}, {"companion", c.get_str()}};
    out.line("L_" + std::to_string(s) + " = " + l.get_str());
    out.line("companion_" + std::to_string(s) + " = " + c.get_str());
    if (defect) {
        const DefectReport rep = is_defective(pair, s);
        result["defective"] = rep.defective;
        result["stripped"] = rep.stripped.get_str();
        result["notes"] = rep.notes;
        out.line(std::string("defective: ") + (rep.defective ? "yes" : "no") + " (" +
                 rep.notes + ")");
    }
    out.add(std::move(result));
}

// ---- classnum / bounds ----------------------------------------------------

void run_classnum(Output& out, const ClassNumberResult& result) {
    json forms = json::array();
    for (const QuadForm& f : result.forms) forms.push_back({f.a, f.b, f.c});
    out.add(json{{"disc", result.disc.get_str()}, {"h", result.h()}, {"forms", forms}});
    out.line("h(" + result.disc.get_str() + ") = " + std::to_string(result.h()));
    for (const QuadForm& f : result.forms)
        out.line("  (" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " +
                 std::to_string(f.c) + ")");
}

// ---- descend ---------------------------------------------------------------

void run_descend(Output& out, const DescentInstance& inst) {
    const DescentWitness wit = descend(inst);
    const bool holds = witness_holds(inst, wit);
    out.add(json{{"x1", wit.x1.get_str()},
                 {"y1", wit.y1.get_str()},
                 {"z1", wit.z1.get_str()},
                 {"t", wit.t.get_str()},
                 {"l1", wit.l1},
                 {"l2", wit.l2},
                 {"verified", holds},
                 {"ok", holds}});
    std::ostringstream line;
    line << "witness: X1=" << wit.x1.get_str() << " Y1=" << wit.y1.get_str()
         << " Z1=" << wit.z1.get_str() << " t=" << wit.t.get_str() << " l1=" << wit.l1
         << " l2=" << wit.l2 << (holds ? "  (re-verified)" : "  (RE-VERIFICATION FAILED)");
    out.line(line.str());
}

// ---- search -----------------------------------------------------------------

void run_search_cmd(Output& out, const SearchConfig& cfg) {
    const SearchReport rep = run_search(cfg);
    for (const CandidateTuple& sol : rep.solutions) {
        json j = tuple_json(sol);
        j["kind"] = "solution";
        out.add(std::move(j));
        std::ostringstream line;
        if (cfg.variant)
            line << "solution: X=" << sol.x.get_str() << " Y=" << sol.y.get_str()
                 << " L=" << sol.l.get_str() << " M=" << sol.m.get_str()
                 << " N=" << sol.n.get_str();
        else
            line << "solution: N=" << sol.n.get_str() << " X=" << sol.x.get_str()
                 << " Y=" << sol.y.get_str() << " L=" << sol.l.get_str()
                 << " M=" << sol.m.get_str();
        out.line(line.str());
    }
    for (const CandidateTuple& sol : rep.catalog_conflicts) {
        json j = tuple_json(sol);
        j["kind"] = "catalog-conflict";
        j["ok"] = false;
        out.add(std::move(j));
        out.line("CATALOG CONFLICT: exponent " + sol.n.get_str() + " not in {3, 4}");
    }
    out.add(json{{"kind", "summary"},
                 {"solutions", rep.solutions.size()},
                 {"candidates_tested", rep.candidates_tested},
                 {"catalog_conflicts", rep.catalog_conflicts.size()},
                 {"ok", rep.ok()}});
    out.line(std::to_string(rep.solutions.size()) + " solution(s), " +
             std::to_string(rep.candidates_tested) + " candidates tested (" +
             std::to_string(rep.elapsed_ms) + " ms)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites and bounded searches for N X^2 + 2^L 3^M = Y^N"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_flag("--json", out.json_mode, "emit a single JSON report on stdout");

    // verify -----------------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->fallthrough();

    CLI::App* table1 = verify->add_subcommand(
        "table1", "defective Lehmer pair registry: validity, defectiveness, twists");
    table1->fallthrough();

    unsigned t_max = 201, samples = 200;
    std::uint64_t seed = kDefaultSampleSeed;
    CLI::App* lemmas =
        verify->add_subcommand("lemmas", "binomial-sum lemma and expansion identities");
    lemmas->fallthrough();
    lemmas->add_option("--t-max", t_max, "largest odd t for the binomial sums");
    lemmas->add_option("--samples", samples, "samples per expansion family");
    lemmas->add_option("--seed", seed, "sample seed (reproducible batches)");

    ClassFactsLimits limits;
    CLI::App* classfacts =
        verify->add_subcommand("classfacts", "class-number scans and analytic bounds");
    classfacts->fallthrough();
    classfacts->add_option("--n-limit", limits.n_limit, "h(-4n) < n scan limit");
    classfacts->add_option("--wn-limit", limits.wn_limit, "field cap scan limit");
    classfacts->add_option("--wn-limit-small", limits.wn_limit_small,
                           "small field cap scan limit");
    classfacts->add_option("--g-samples", limits.g_samples, "monotonicity samples");
    classfacts->add_option("--bound-limit", limits.bound_disc_limit,
                           "fundamental discriminant limit");

    CLI::App* residues =
        verify->add_subcommand("residues", "residue grids behind the congruence steps");
    residues->fallthrough();

    // lehmer -------------------------------------------------------------------
    std::string r_str, q_str;
    unsigned lehmer_s = 1;
    bool defect = false;
    CLI::App* lehmer_cmd = app.add_subcommand("lehmer", "Lehmer and companion numbers");
    lehmer_cmd->fallthrough();
    lehmer_cmd->add_option("--r", r_str, "R = (gamma+delta)^2")->required()->check(kBigInt);
    lehmer_cmd->add_option("--q", q_str, "Q = gamma*delta")->required()->check(kBigInt);
    lehmer_cmd->add_option("--s", lehmer_s, "index")->required();
    lehmer_cmd->add_flag("--defect", defect, "also run the defectiveness check");

    // classnum -------------------------------------------------------------------
    std::string disc_str, field_str;
    CLI::App* classnum = app.add_subcommand("classnum", "class number by form enumeration");
    classnum->fallthrough();
    CLI::Option* disc_opt =
        classnum->add_option("--disc", disc_str, "negative discriminant")->check(kBigInt);
    CLI::Option* field_opt =
        classnum->add_option("--field", field_str, "negative square-free field radicand")
            ->check(kBigInt);
    disc_opt->excludes(field_opt);

    // bounds ------------------------------------------------------------------------
    std::string bounds_disc_str, bounds_g_str;
    CLI::App* bounds = app.add_subcommand("bounds", "analytic class-number bounds");
    bounds->fallthrough();
    CLI::Option* bd = bounds->add_option("--disc", bounds_disc_str,
                                         "bound for a negative discriminant")
                          ->check(kBigInt);
    CLI::Option* bg =
        bounds->add_option("--g", bounds_g_str, "threshold function g(n)")->check(kBigInt);
    bd->excludes(bg);

    // descend ---------------------------------------------------------------------------
    std::string d_str, k_str, x_str, y_str, z_str;
    CLI::App* descend_cmd =
        app.add_subcommand("descend", "witness for X^2 + d Y^2 = k^Z");
    descend_cmd->fallthrough();
    descend_cmd->add_option("--d", d_str, "square-free d > 1")->required()->check(kBigInt);
    descend_cmd->add_option("--k", k_str, "odd k > 1, coprime to d")->required()->check(kBigInt);
    descend_cmd->add_option("--x", x_str, "X")->required()->check(kBigInt);
    descend_cmd->add_option("--y", y_str, "Y")->required()->check(kBigInt);
    descend_cmd->add_option("--z", z_str, "Z")->required()->check(kBigInt);

    // search ---------------------------------------------------------------------------
    SearchConfig cfg;
    std::string n_max_str, y_max_str;
    bool unfiltered = false;
    CLI::App* search = app.add_subcommand("search", "bounded exhaustive search");
    search->require_subcommand(1);
    search->fallthrough();
    CLI::App* search_main_cmd =
        search->add_subcommand("main", "N X^2 + 2^L 3^M = Y^N, gcd(N X, Y) = 1");
    CLI::App* search_variant_cmd =
        search->add_subcommand("variant", "X^2 + 2^L 3^M = Y^N, gcd(X, Y) = 1");
    for (CLI::App* sub : {search_main_cmd, search_variant_cmd}) {
        sub->fallthrough();
        sub->add_option("--n-max", n_max_str, "largest exponent N")->required()->check(kBigInt);
        sub->add_option("--y-max", y_max_str, "largest base Y")->required()->check(kBigInt);
        sub->add_option("--l-max", cfg.l_max, "largest L")->required();
        sub->add_option("--m-max", cfg.m_max, "largest M")->required();
        sub->add_option("--jobs", cfg.jobs, "worker count");
        sub->add_flag("--unfiltered", unfiltered, "disable the mod-6 pruning");
        sub->add_flag("--allow-zero-exponents", cfg.allow_zero_exponents,
                      "exploratory: allow L = 0 or M = 0")
            ->group("");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (table1->parsed()) {
            out.report.command = "verify table1";
            run_table1(out);
        } else if (lemmas->parsed()) {
            out.report.command = "verify lemmas";
            out.report.params = {{"t_max", std::to_string(t_max)},
                                 {"samples", std::to_string(samples)},
                                 {"seed", std::to_string(seed)}};
            run_lemmas(out, t_max, samples, seed);
        } else if (classfacts->parsed()) {
            out.report.command = "verify classfacts";
            out.report.params = {{"n_limit", std::to_string(limits.n_limit)},
                                 {"wn_limit", std::to_string(limits.wn_limit)},
                                 {"wn_limit_small", std::to_string(limits.wn_limit_small)}};
            run_classfacts(out, limits);
        } else if (residues->parsed()) {
            out.report.command = "verify residues";
            run_residues(out);
        } else if (lehmer_cmd->parsed()) {
            out.report.command = "lehmer";
            out.report.params = {{"r", r_str}, {"q", q_str}, {"s", std::to_string(lehmer_s)}};
            run_lehmer(out, Int(r_str), Int(q_str), lehmer_s, defect);
        } else if (classnum->parsed()) {
            out.report.command = "classnum";
            if (disc_str.empty() == field_str.empty())
                throw std::invalid_argument("classnum: give exactly one of --disc, --field");
            if (!disc_str.empty()) {
                out.report.params = {{"disc", disc_str}};
                run_classnum(out, h_form(Int(disc_str)));
            } else {
                out.report.params = {{"field", field_str}};
                run_classnum(out, field_class_number(Int(field_str)));
            }
        } else if (bounds->parsed()) {
            out.report.command = "bounds";
            if (bounds_disc_str.empty() == bounds_g_str.empty())
                throw std::invalid_argument("bounds: give exactly one of --disc, --g");
            if (!bounds_disc_str.empty()) {
                const double b = class_number_bound(Int(bounds_disc_str));
                out.report.params = {{"disc", bounds_disc_str}};
                out.add(json{{"disc", bounds_disc_str}, {"bound", b}});
                out.line("bound(" + bounds_disc_str + ") = " + fmt_double(b));
            } else {
                const double g = g_threshold(Int(bounds_g_str));
                out.report.params = {{"n", bounds_g_str}};
                out.add(json{{"n", bounds_g_str}, {"g", g}});
                out.line("g(" + bounds_g_str + ") = " + fmt_double(g));
            }
        } else if (descend_cmd->parsed()) {
            out.report.command = "descend";
            out.report.params = {{"d", d_str}, {"k", k_str}, {"x", x_str},
                                 {"y", y_str}, {"z", z_str}};
            run_descend(out, DescentInstance{Int(d_str), Int(k_str), Int(x_str), Int(y_str),
                                             Int(z_str)});
        } else if (search_main_cmd->parsed() || search_variant_cmd->parsed()) {
            cfg.variant = search_variant_cmd->parsed();
            cfg.filtered = !unfiltered;
            cfg.n_max = Int(n_max_str);
            cfg.y_max = Int(y_max_str);
            out.report.command = cfg.variant ? "search variant" : "search main";
            out.report.params = {{"n_max", n_max_str},
                                 {"y_max", y_max_str},
                                 {"l_max", std::to_string(cfg.l_max)},
                                 {"m_max", std::to_string(cfg.m_max)},
                                 {"jobs", std::to_string(cfg.jobs)},
                                 {"filtered", cfg.filtered ? "true" : "false"}};
            run_search_cmd(out, cfg);
        }
        out.report.set_status_from_results();
    } catch (const NoWitnessError& e) {
        out.add(json{{"error", e.what()}, {"ok", false}});
        out.line(std::string("NO WITNESS: ") + e.what());
        out.report.status = CommandReport::Status::Fail;
    } catch (const std::exception& e) {
        out.report.status = CommandReport::Status::Error;
        out.add(json{{"error", e.what()}});
        if (!out.json_mode) std::cerr << "error: " << e.what() << "\n";
    }
    out.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();

    if (out.json_mode)
        std::cout << out.report.to_json().dump(2) << "\n";
    else
        out.line("status: " + std::string(CommandReport::status_name(out.report.status)) +
                 " (" + std::to_string(out.report.elapsed_ms) + " ms)");
    return out.report.exit_code();
}
