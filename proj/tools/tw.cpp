// tw: command-line front end for the tableau-walk toolkit.
//
// Subcommands: enumerate, bij, walks, series, tree, verify.
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "tw/baxter.hpp"
#include "tw/chen.hpp"
#include "tw/gentree.hpp"
#include "tw/json_io.hpp"
#include "tw/marked_table.hpp"
#include "tw/patterns.hpp"
#include "tw/qexcursions.hpp"
#include "tw/series.hpp"
#include "tw/verify.hpp"
#include "tw/walks.hpp"

namespace {

using tw::json;

int threads_from(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("TW_THREADS"))
        if (int v = std::atoi(env); v > 0) return v;
    return 1;
}

void emit(const std::string& path, const json& payload) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << payload.dump(2) << "\n";
}

json diagram_stats(const tw::ArcDiagram& d) {
    json st;
    st["n"] = d.n();
    st["opener_closer_word"] = d.opener_closer_word();
    st["cr"] = tw::pattern_level(d, {tw::PatternKind::crossing, tw::PatternVariant::plain});
    st["ne"] = tw::pattern_level(d, {tw::PatternKind::nesting, tw::PatternVariant::plain});
    if (d.is_open_class()) {
        st["open_cr"] = tw::pattern_level(d, {tw::PatternKind::crossing, tw::PatternVariant::open});
        st["open_ne"] = tw::pattern_level(d, {tw::PatternKind::nesting, tw::PatternVariant::open});
    }
    if (d.diagram_class() == tw::DiagramClass::involution) {
        tw::Involution a = d.to_involution();
        st["enhne"] = tw::enhne(a);
        st["futne"] = tw::futne(a);
        st["fixed_points"] = a.fixed_points();
    }
    return st;
}

json load_json_arg(const std::string& file, const std::string& inline_text) {
    if (!inline_text.empty()) return json::parse(inline_text);
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file);
    json j;
    in >> j;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bijections and verifiers for bounded-height tableau sequences, "
                 "open arc diagrams, chamber walks and Baxter families"};
    app.require_subcommand(1);

    int threads_flag = 0;
    unsigned seed = 12345;
    app.add_option("--threads", threads_flag, "worker threads for verification sweeps (env TW_THREADS)");
    app.add_option("--seed", seed, "seed for the sampled cross-checks (default fixed)");

    // --- enumerate ---
    auto* cmd_enum = app.add_subcommand("enumerate", "list objects as JSON lines");
    std::string what = "set_partitions";
    int en = 0, eheight = -1, elength = -1;
    std::string ekind = "oscillating", eend = "any";
    cmd_enum->add_option("--what", what,
                         "syt | involutions | set_partitions | matchings | open_matchings | "
                         "open_partitions | tableaux");
    cmd_enum->add_option("--n", en, "object size");
    cmd_enum->add_option("--height", eheight, "height bound (syt, tableaux)");
    cmd_enum->add_option("--kind", ekind, "tableau kind for --what tableaux");
    cmd_enum->add_option("--length", elength, "sequence length for --what tableaux");
    cmd_enum->add_option("--end", eend, "end filter for tableaux: any | row | a JSON partition");

    // --- bij ---
    auto* cmd_bij = app.add_subcommand("bij", "apply a bijection to a diagram or involution");
    std::string map_name, in_file, in_line, bij_emit;
    cmd_bij->add_option("--map", map_name, "phi | phi_osc | phi_hes | psi | theta | swap | tau_conj")
        ->required();
    cmd_bij->add_option("--in", in_file, "input JSON file");
    cmd_bij->add_option("--inline", in_line, "input JSON text");
    cmd_bij->add_option("--emit", bij_emit, "write the result JSON to a file");

    // --- walks ---
    auto* cmd_walks = app.add_subcommand("walks", "walk counting and conjecture sweeps");
    auto* walks_count = cmd_walks->add_subcommand("count", "count walks by endpoint");
    std::string wkind = "hesitating", wregion = "weak", wend = "axis";
    int wk = 2, wlen = 0;
    walks_count->add_option("--kind", wkind, "oscillating | vacillating | hesitating");
    walks_count->add_option("--region", wregion, "weak | strict | shifted | quadrant");
    walks_count->add_option("--k", wk, "dimension");
    walks_count->add_option("--len", wlen, "number of steps");
    walks_count->add_option("--end", wend, "axis | any | a JSON point like [2,0]");
    auto* walks_conj = cmd_walks->add_subcommand("conjecture", "run the conjecture verifiers");
    int cnmax = 8;
    std::string conj_emit;
    walks_conj->add_option("--nmax", cnmax, "largest n");
    walks_conj->add_option("--emit", conj_emit, "write the JSON report to a file");

    // --- series ---
    auto* cmd_series = app.add_subcommand("series", "exact series and integer formulas");
    auto* s_syt = cmd_series->add_subcommand("syt", "EGF of SYT with height <= 2k");
    auto* s_osc = cmd_series->add_subcommand("osc", "EGF of oscillating tableaux ending at a row");
    auto* s_bax = cmd_series->add_subcommand("baxter", "Baxter number");
    auto* s_ids = cmd_series->add_subcommand("identities", "verify the coefficient identities");
    auto* s_w = cmd_series->add_subcommand("w", "coefficients of W(t)");
    int sk = 2, sorder = 12;
    long sn = 1, snmax = 40;
    s_syt->add_option("--k", sk);
    s_syt->add_option("--order", sorder);
    s_osc->add_option("--k", sk);
    s_osc->add_option("--order", sorder);
    s_bax->add_option("--n", sn)->required();
    s_ids->add_option("--nmax", snmax);
    s_w->add_option("--nmax", snmax);

    // --- tree ---
    auto* cmd_tree = app.add_subcommand("tree", "generating-tree level sizes");
    std::string rule = "open_partitions";
    int depth = 10;
    bool allow_quarantined = false;
    cmd_tree->add_option("--rule", rule, "triples | permutations | open_partitions");
    cmd_tree->add_option("--depth", depth);
    cmd_tree->add_flag("--allow-quarantined", allow_quarantined,
                       "evaluate a quarantined rule with its literal reading");

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite, verify_emit;
    int vn = -1, vdepth = -1, vorder = -1, vswap = -1, vmatch = -1;
    cmd_verify->add_option("--suite", suite, "suite name, or 'all'")->required();
    int vk = -1;
    cmd_verify->add_option("--n", vn, "size/order parameter");
    cmd_verify->add_option("--nmax", vn, "alias of --n");
    cmd_verify->add_option("--k", vk, "height-bound sweep limit (theorem1)");
    cmd_verify->add_option("--depth", vdepth, "tree depth (gentree)");
    cmd_verify->add_option("--order", vorder, "series order (series431)");
    cmd_verify->add_option("--swap-n", vswap, "swap sweep bound (theorem9)");
    cmd_verify->add_option("--matching-n", vmatch, "matching/involution bound (roundtrips)");
    cmd_verify->add_option("--emit", verify_emit, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        int threads = threads_from(threads_flag);

        if (*cmd_enum) {
            if (what == "syt") {
                for (auto& t : tw::enumerate_syt(en, eheight < 0 ? en : eheight))
                    std::cout << tw::to_json(t).dump() << "\n";
            } else if (what == "involutions") {
                for (auto& a : tw::enumerate_involutions(en))
                    std::cout << tw::to_json(a).dump() << "\n";
            } else if (what == "tableaux") {
                tw::TableauFilter filter;
                if (eend == "row") filter.end_any_row = true;
                else if (eend != "any") filter.end = tw::partition_from_json(json::parse(eend));
                auto seqs = tw::enumerate_tableaux(tw::tableau_kind_from_string(ekind),
                                                   elength < 0 ? en : elength,
                                                   eheight < 0 ? en : eheight, filter);
                for (auto& s : seqs) std::cout << tw::to_json(s).dump() << "\n";
            } else {
                for (auto& d : tw::enumerate_diagrams(tw::diagram_class_from_string(
                                                          what == "set_partitions" ? "set_partition"
                                                          : what == "matchings"    ? "matching"
                                                          : what == "open_matchings"
                                                              ? "open_matching"
                                                          : what == "open_partitions"
                                                              ? "open_partition"
                                                              : what),
                                                      en))
                    std::cout << tw::to_json(d).dump() << "\n";
            }
            return 0;
        }

        if (*cmd_bij) {
            json input = load_json_arg(in_file, in_line);
            json out;
            if (map_name == "phi" || map_name == "phi_hes") {
                tw::ArcDiagram d = tw::diagram_from_json(input);
                tw::FerrersSequence s =
                    map_name == "phi" ? tw::phi(d).second : tw::phi_hesitating(d);
                out = {{"input", input}, {"image", tw::to_json(s)}, {"stats_before", diagram_stats(d)}};
            } else if (map_name == "phi_osc") {
                tw::ArcDiagram d = tw::diagram_from_json(input);
                out = {{"input", input},
                       {"image", tw::to_json(tw::phi_oscillating(d))},
                       {"stats_before", diagram_stats(d)}};
            } else if (map_name == "tau_conj") {
                tw::ArcDiagram d = tw::diagram_from_json(input);
                tw::ArcDiagram img = tw::phi_inverse(tw::tau(tw::phi(d).second));
                out = {{"input", input},
                       {"image", tw::to_json(img)},
                       {"stats_before", diagram_stats(d)},
                       {"stats_after", diagram_stats(img)}};
            } else {
                // involutions arrive either as {"n","cycles"} or as a
                // diagram with class "involution"
                tw::Involution a = input.contains("cycles")
                                       ? tw::involution_from_json(input)
                                       : tw::diagram_from_json(input).to_involution();
                if (map_name == "psi") {
                    tw::ArcDiagram img = tw::psi(a);
                    out = {{"input", input},
                           {"image", tw::to_json(img)},
                           {"stats_before", diagram_stats(tw::involution_diagram(a))},
                           {"stats_after", diagram_stats(img)}};
                } else if (map_name == "theta" || map_name == "swap") {
                    tw::Involution img = map_name == "theta" ? tw::theta(a) : tw::nesting_swap(a);
                    out = {{"input", input},
                           {"image", tw::to_json(img)},
                           {"stats_before", diagram_stats(tw::involution_diagram(a))},
                           {"stats_after", diagram_stats(tw::involution_diagram(img))}};
                } else {
                    std::cerr << "unknown map: " << map_name << "\n";
                    return 2;
                }
            }
            std::cout << out.dump(2) << "\n";
            emit(bij_emit, out);
            return 0;
        }

        if (*walks_count) {
            tw::WalkSpec spec{tw::tableau_kind_from_string(wkind),
                              wregion == "weak"      ? tw::WalkRegion::wk_weak
                              : wregion == "strict"  ? tw::WalkRegion::wk_strict
                              : wregion == "shifted" ? tw::WalkRegion::wk_shifted
                                                     : tw::WalkRegion::quadrant,
                              wk, wlen, {}};
            json out{{"kind", wkind}, {"region", wregion}, {"k", wk}, {"len", wlen}};
            if (wend == "axis") out["count"] = tw::count_walks_row_endpoints(spec).get_str();
            else if (wend == "any") out["count"] = tw::count_walks_total(spec).get_str();
            else out["count"] = tw::count_walks_to(spec, json::parse(wend).get<std::vector<int>>()).get_str();
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*walks_conj) {
            json report = json::array();
            bool all_ok = true;
            tw::MarkedTable layer = tw::MarkedTable::initial(cnmax);
            for (int n = 0; n <= cnmax; ++n) {
                if (n > 0) layer = layer.next();
                json entry{{"n", n}};
                bool c3 = true;
                json cex;
                for (int i = 0; i <= n && c3; ++i)
                    for (int j = 0; j < i && c3; ++j)
                        if (layer.at(i, 0, j) != layer.at(j, 0, i)) {
                            c3 = false;
                            cex = json{{"i", i},
                                       {"j", j},
                                       {"a(n;i,0,j)", layer.at(i, 0, j).get_str()},
                                       {"a(n;j,0,i)", layer.at(j, 0, i).get_str()}};
                        }
                entry["conjecture3"] = c3;
                if (!c3) entry["counterexample"] = cex;
                if (n <= 8) {
                    auto q = n <= 7 ? tw::q_distribution_exhaustive(n) : tw::q_distribution_dp(n);
                    bool c2 = true;
                    for (int m = 0; m <= n && c2; ++m) {
                        tw::Int qs = q.count(m) ? q[m] : tw::Int(0);
                        if (qs != layer.at(m, 0, 0)) {
                            c2 = false;
                            entry["counterexample"] =
                                json{{"m", m}, {"q", qs.get_str()}, {"a", layer.at(m, 0, 0).get_str()}};
                        }
                    }
                    entry["conjecture2"] = c2;
                    all_ok = all_ok && c2;
                }
                all_ok = all_ok && c3;
                report.push_back(entry);
            }
            json payload{{"suite", "walks-conjecture"}, {"nmax", cnmax}, {"ok", all_ok}, {"per_n", report}};
            std::cout << payload.dump(2) << "\n";
            emit(conj_emit, payload);
            return all_ok ? 0 : 1;
        }

        if (*s_syt || *s_osc) {
            tw::PowerSeries s = *s_syt ? tw::syt_egf(sk, sorder) : tw::osc_row_egf(sk, sorder);
            json coeffs = json::array(), counts = json::array();
            for (int i = 0; i <= sorder; ++i) {
                coeffs.push_back(s.coeff(i).get_str());
                counts.push_back(tw::egf_count(s, i).get_str());
            }
            std::cout << json{{"k", sk}, {"order", sorder}, {"egf", coeffs}, {"counts", counts}}.dump(2)
                      << "\n";
            return 0;
        }
        if (*s_bax) {
            std::cout << tw::baxter(sn).get_str() << "\n";
            return 0;
        }
        if (*s_ids) {
            auto r = tw::identity_checks(snmax);
            json out{{"nmax", snmax}, {"ok", r.ok}};
            if (!r.ok) out["counterexample"] = json{{"n", r.n}, {"j", r.j}, {"relation", r.relation}};
            std::cout << out.dump() << "\n";
            return r.ok ? 0 : 1;
        }
        if (*s_w) {
            json vals = json::array();
            for (auto& v : tw::w_series(snmax)) vals.push_back(v.get_str());
            std::cout << json{{"nmax", snmax}, {"w", vals}}.dump() << "\n";
            return 0;
        }

        if (*cmd_tree) {
            auto levels = tw::tree_levels(tw::rule_from_string(rule), depth, allow_quarantined);
            json lv = json::array();
            for (auto& x : levels) lv.push_back(x.get_str());
            json out{{"rule", rule}, {"depth", depth}, {"levels", lv}};
            if (rule == "permutations") {
                const auto& st = tw::rule2_status();
                out["rule2"] = json{{"adopted", st.adopted}, {"note", st.description}};
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*cmd_verify) {
            std::vector<std::string> names =
                suite == "all" ? tw::verification_suite_names() : std::vector<std::string>{suite};
            json params;
            if (vn >= 0) params["n"] = vn;
            if (vk >= 0) params["k"] = vk;
            if (vdepth >= 0) params["depth"] = vdepth;
            if (vorder >= 0) params["order"] = vorder;
            if (vswap >= 0) params["swap_n"] = vswap;
            if (vmatch >= 0) params["matching_n"] = vmatch;
            params["seed"] = seed;
            json reports = json::array();
            bool all_ok = true;
            for (auto& name : names) {
                auto rep = tw::run_verification_suite(name, params, threads);
                for (auto& c : rep.cases)
                    std::cout << (c.pass ? "PASS " : "FAIL ") << rep.suite << ": " << c.id
                              << (c.pass ? "" : "  [" + c.detail + "]") << "\n";
                std::cout << (rep.ok() ? "OK   " : "FAIL ") << rep.suite << " ("
                          << rep.cases.size() << " cases, " << rep.seconds << " s)\n";
                reports.push_back(rep.to_json());
                all_ok = all_ok && rep.ok();
            }
            emit(verify_emit, names.size() == 1 ? reports[0] : json{{"suites", reports}});
            return all_ok ? 0 : 1;
        }

        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
