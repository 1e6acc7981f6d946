#include "clusterkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "clusterkit/bongartz.hpp"
#include "clusterkit/harness.hpp"
#include "clusterkit/invariant.hpp"
#include "clusterkit/json_io.hpp"

namespace clusterkit {

namespace {

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string type;
    std::size_t max_seeds = 10000;
    std::size_t max_terms = 1000000;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_type = true) {
    cmd->add_option("--input,-i", opts.input, "input file path or inline JSON");
    cmd->add_option("--output,-o", opts.output, "output file (default stdout)");
    cmd->add_option("--format,-f", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_type)
        cmd->add_option("--type,-t", opts.type, "named exchange matrix")
            ->check(CLI::IsMember({"A1", "A2", "A3", "A4", "B2", "B3", "G2"}));
    cmd->add_option("--max-seeds", opts.max_seeds, "exploration seed cap");
    cmd->add_option("--max-terms", opts.max_terms, "polynomial term cap");
}

json named_matrix(const std::string& type) {
    if (type == "A1") return json::parse("[[0]]");
    if (type == "A2") return json::parse("[[0,1],[-1,0]]");
    if (type == "A3") return json::parse("[[0,1,0],[-1,0,1],[0,-1,0]]");
    if (type == "A4") return json::parse("[[0,1,0,0],[-1,0,1,0],[0,-1,0,1],[0,0,-1,0]]");
    if (type == "B2") return json::parse("[[0,1],[-2,0]]");
    if (type == "B3") return json::parse("[[0,1,0],[-1,0,1],[0,-2,0]]");
    if (type == "G2") return json::parse("[[0,1],[-3,0]]");
    throw input_error("unknown matrix type " + type);
}

json read_input(const CommonOpts& opts) {
    if (opts.input.empty()) throw input_error("missing --input");
    std::string text = opts.input;
    if (!text.empty() && text[0] != '{' && text[0] != '[') {
        std::ifstream in(opts.input);
        if (!in) throw input_error("cannot open input file " + opts.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_json_text(text);
}

ExchangeMatrix resolve_matrix(const CommonOpts& opts) {
    if (!opts.type.empty()) return exchange_from_json(named_matrix(opts.type));
    return exchange_from_json(read_input(opts));
}

ExchangeMatrix matrix_from_payload(const CommonOpts& opts, const json& payload) {
    if (!opts.type.empty()) return exchange_from_json(named_matrix(opts.type));
    if (payload.is_object() && payload.contains("B")) return exchange_from_json(payload);
    throw input_error("input needs a field B (or use --type)");
}

void write_out(const CommonOpts& opts, const std::string& text, std::ostream& out) {
    if (opts.output.empty()) {
        out << text;
        return;
    }
    std::ofstream o(opts.output);
    if (!o) throw input_error("cannot open output file " + opts.output);
    o << text;
}

void emit(const CommonOpts& opts, const json& payload, const std::string& text_form,
          std::ostream& out) {
    if (opts.format == "json")
        write_out(opts, payload.dump() + "\n", out);
    else
        write_out(opts, text_form, out);
}

// A seed JSON stores the current exchange matrix; the pattern's root matrix is
// recovered by undoing the path (mutation is an involution per direction).
ExchangeMatrix root_from_seed_json(const json& payload) {
    IntMatrix b = intmatrix_from_json(payload["B"], "seed.B");
    if (!payload.contains("path") || !payload["path"].is_array())
        throw input_error("seed.path: missing");
    std::vector<int> path;
    for (const auto& x : payload["path"]) path.push_back(x.get<int>());
    for (auto it = path.rbegin(); it != path.rend(); ++it) b = mutate_matrix(b, *it);
    return ExchangeMatrix::make(std::move(b));
}

std::vector<int> dirs_from_string(const std::string& dirs) {
    std::vector<int> ks;
    std::string token;
    std::istringstream in(dirs);
    while (std::getline(in, token, ',')) {
        std::istringstream word(token);
        int k;
        while (word >> k) ks.push_back(k);
    }
    return ks;
}

// A monomial {"path": [...], "h": [...]} names the seed reached by the path
// and position exponents there. Positions are re-expressed through variable
// ids so the result is independent of the stored representative's labeling.
ClusterMonomial monomial_from_json(const ExchangeGraph& graph, const json& j,
                                   const std::string& where) {
    if (!j.is_object() || !j.contains("path") || !j.contains("h"))
        throw input_error(where + ": monomial needs fields path and h");
    std::vector<int> path, h;
    for (const auto& x : j["path"]) path.push_back(x.get<int>());
    for (const auto& x : j["h"]) h.push_back(x.get<int>());
    if (h.size() != graph.rank()) throw input_error(where + ".h: wrong rank");
    Seed s = graph.pattern.initial();
    for (int k : path) s = graph.pattern.mutate(s, k);
    std::map<int, int> support;
    for (std::size_t i = 0; i < graph.rank(); ++i) {
        if (h[i] == 0) continue;
        if (h[i] < 0) throw input_error(where + ".h: negative exponent");
        ClusterVariableId id = graph.pattern.variable_id(s, static_cast<int>(i) + 1);
        int var = -1;
        for (std::size_t z = 0; z < graph.variables.size(); ++z)
            if (graph.variables[z] == id) var = static_cast<int>(z);
        if (var < 0) throw input_error(where + ": variable not found in explored graph");
        support[var] += h[i];
    }
    std::vector<int> vars;
    for (const auto& [v, mult] : support) {
        (void)mult;
        vars.push_back(v);
    }
    auto hosts = graph.seeds_containing(vars);
    if (hosts.empty()) throw input_error(where + ": support is not a partial cluster");
    std::vector<int> hh(graph.rank(), 0);
    for (const auto& [v, mult] : support) {
        const auto& pos = graph.var_of[static_cast<std::size_t>(hosts.front())];
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (pos[i] == v) hh[i] = mult;
    }
    return make_monomial(graph, hosts.front(), hh);
}

int variable_index_from_json(const ExchangeGraph& graph, const json& j,
                             const std::string& where) {
    if (j.is_object() && j.contains("g")) {
        std::vector<int> g;
        for (const auto& x : j["g"]) g.push_back(x.get<int>());
        for (std::size_t z = 0; z < graph.variables.size(); ++z)
            if (graph.variables[z].g == g) return static_cast<int>(z);
        throw input_error(where + ": no variable with that g-vector");
    }
    if (j.is_object() && j.contains("path") && j.contains("index")) {
        Seed s = graph.pattern.initial();
        for (const auto& x : j["path"]) s = graph.pattern.mutate(s, x.get<int>());
        ClusterVariableId id = graph.pattern.variable_id(s, j["index"].get<int>());
        for (std::size_t z = 0; z < graph.variables.size(); ++z)
            if (graph.variables[z] == id) return static_cast<int>(z);
        throw input_error(where + ": variable not found in explored graph");
    }
    throw input_error(where + ": expected {\"g\": [..]} or {\"path\": [..], \"index\": k}");
}

std::string verdict_name(GraphVerdict v) {
    return v == GraphVerdict::finite ? "Finite" : "CapExceeded";
}

int cmd_mutate(const CommonOpts& opts, const std::string& dirs, std::ostream& out) {
    json payload = read_input(opts);
    ExchangeMatrix root =
        payload.is_object() && payload.contains("vars") ? root_from_seed_json(payload)
        : !opts.type.empty()                            ? exchange_from_json(named_matrix(opts.type))
                                                        : exchange_from_json(payload);
    ClusterPattern pattern(root);
    Seed s = payload.is_object() && payload.contains("vars") ? seed_from_json(pattern, payload)
                                                             : pattern.initial();
    for (int k : dirs_from_string(dirs)) s = pattern.mutate(s, k);
    json j = seed_to_json(pattern, s);
    emit(opts, j, j.dump(2) + "\n", out);
    return 0;
}

int cmd_explore(const CommonOpts& opts, std::ostream& out) {
    ExchangeGraph graph = explore(resolve_matrix(opts), ExploreLimits{opts.max_seeds});
    json j{{"seeds", graph.seeds.size()},
           {"variables", graph.variables.size()},
           {"verdict", verdict_name(graph.verdict)}};
    std::ostringstream text;
    text << graph.seeds.size() << " seeds, " << verdict_name(graph.verdict) << "; "
         << graph.variables.size() << " cluster variables\n";
    emit(opts, j, text.str(), out);
    return 0;
}

int cmd_var(const CommonOpts& opts, const std::string& dirs, int index, std::ostream& out) {
    json payload = read_input(opts);
    ExchangeMatrix root =
        payload.is_object() && payload.contains("vars") ? root_from_seed_json(payload)
        : !opts.type.empty()                            ? exchange_from_json(named_matrix(opts.type))
                                                        : exchange_from_json(payload);
    ClusterPattern pattern(root);
    Seed s = payload.is_object() && payload.contains("vars") ? seed_from_json(pattern, payload)
                                                             : pattern.initial();
    for (int k : dirs_from_string(dirs)) s = pattern.mutate(s, k);
    ClusterVariableId id = pattern.variable_id(s, index);
    json j = to_json(id);
    std::ostringstream text;
    text << "g = (";
    for (std::size_t i = 0; i < id.g.size(); ++i) text << (i ? "," : "") << id.g[i];
    text << "), F has " << id.F.term_count() << " terms\n";
    emit(opts, j, text.str(), out);
    return 0;
}

int cmd_trop(const CommonOpts& opts, std::ostream& out) {
    json payload = read_input(opts);
    if (!payload.is_object() || !payload.contains("F") || !payload.contains("r"))
        throw input_error("trop input needs fields F and r");
    YPolynomial f = ypoly_from_json(payload["F"], "F");
    Point r;
    for (const auto& x : payload["r"]) r.push_back(int_from_json(x, "r"));
    Int value = tropical_eval(f, r);
    json j{{"value", int_to_json(value)}};
    emit(opts, j, "F[r] = " + j["value"].dump() + "\n", out);
    return 0;
}

int cmd_finv(const CommonOpts& opts, std::ostream& out) {
    json payload = read_input(opts);
    ExchangeGraph graph = explore(matrix_from_payload(opts, payload), ExploreLimits{opts.max_seeds});
    if (!payload.contains("u") || !payload.contains("v"))
        throw input_error("finv input needs monomials u and v");
    ClusterMonomial u = monomial_from_json(graph, payload["u"], "u");
    ClusterMonomial v = monomial_from_json(graph, payload["v"], "v");
    FInvariantReport rep = f_invariant(graph, u, v);
    json j = to_json(rep);
    std::ostringstream text;
    text << "(u||v)_F = " << rep.value << "  (parts " << rep.left_part << " + " << rep.right_part
         << ")\n";
    emit(opts, j, text.str(), out);
    return 0;
}

int cmd_bongartz(const CommonOpts& opts, std::ostream& out) {
    json payload = read_input(opts);
    ExchangeGraph graph = explore(matrix_from_payload(opts, payload), ExploreLimits{opts.max_seeds});
    if (!graph.is_finite()) throw resource_error("exploration hit the seed cap");
    std::vector<int> vars;
    if (payload.contains("U"))
        for (std::size_t i = 0; i < payload["U"].size(); ++i)
            vars.push_back(
                variable_index_from_json(graph, payload["U"][i], "U[" + std::to_string(i) + "]"));
    PartialCluster u = make_partial_cluster(graph, vars);
    bool right = payload.contains("side") && payload["side"] == "right";
    json ids = json::array();
    for (int v : vars) ids.push_back(to_json(graph.variables[static_cast<std::size_t>(v)]));
    if (right) {
        auto r = right_bongartz_completion(graph, u);
        json path = json::array();
        if (r)
            for (int k : graph.seeds[static_cast<std::size_t>(r->seed)].path) path.push_back(k);
        json j{{"U", ids},
               {"found", r.has_value()},
               {"result_path", path},
               {"checked", r ? r->checked : graph.seeds.size()}};
        emit(opts, j, r ? "right completion found\n" : "right completion does not exist\n", out);
        return 0;
    }
    CompletionResult r = left_bongartz_completion(graph, u);
    json path = json::array();
    for (int k : graph.seeds[static_cast<std::size_t>(r.seed)].path) path.push_back(k);
    json j{{"U", ids}, {"result_path", path}, {"checked", r.checked}};
    std::ostringstream text;
    text << "left completion at path [";
    for (std::size_t i = 0; i < graph.seeds[static_cast<std::size_t>(r.seed)].path.size(); ++i)
        text << (i ? " " : "") << graph.seeds[static_cast<std::size_t>(r.seed)].path[i];
    text << "], checked " << r.checked << " clusters\n";
    emit(opts, j, text.str(), out);
    return 0;
}

int cmd_reduce(const CommonOpts& opts, std::ostream& out) {
    json payload = read_input(opts);
    ExchangeGraph graph = explore(matrix_from_payload(opts, payload), ExploreLimits{opts.max_seeds});
    if (!graph.is_finite()) throw resource_error("exploration hit the seed cap");
    ClusterMonomial u = monomial_from_json(graph, payload["u"], "u");
    ClusterMonomial v = monomial_from_json(graph, payload["v"], "v");
    ReductionTrace trace = reduce_pair(graph, u, v);
    json steps = json::array();
    for (const auto& st : trace.steps) {
        json path = json::array();
        for (int k : st.completion_path) path.push_back(k);
        steps.push_back(json{{"completion_path", path},
                             {"k", st.k},
                             {"exponent", int_to_json(st.exponent)},
                             {"support_before", st.support_before},
                             {"support_after", st.support_after}});
    }
    bool equal = trace.verdict == ReductionVerdict::equal;
    json j{{"steps", steps},
           {"verdict", equal ? "Equal" : "CounterexampleSuspect"},
           {"detail", trace.detail}};
    std::ostringstream text;
    text << "verdict: " << (equal ? "Equal" : "CounterexampleSuspect") << " after "
         << trace.steps.size() << " steps\n";
    emit(opts, j, text.str(), out);
    return equal ? 0 : 1;
}

json sweep_json(const tau::SweepReport& rep) {
    return json{{"checked", rep.checked}, {"failed", rep.failed}};
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, int degree_cap, int mult_cap,
               int rank, std::ostream& out) {
    bool failed = false;
    json report = json::object();
    std::ostringstream text;
    std::vector<std::string> types =
        opts.type.empty() ? std::vector<std::string>{"A2", "A3", "B2", "G2"}
                          : std::vector<std::string>{opts.type};

    auto need_graph = [&](const std::string& type) {
        CommonOpts o = opts;
        o.type = type;
        return explore(resolve_matrix(o), ExploreLimits{opts.max_seeds});
    };

    if (suite == "identities" || suite == "all") {
        json per = json::object();
        for (const auto& type : types) {
            ExchangeGraph graph = need_graph(type);
            IdentityReport rep = verify_identities(graph);
            per[type] = json{{"seeds", rep.seeds},
                             {"edges", rep.edges},
                             {"duality_failed", rep.duality.failed},
                             {"sign_coherence_failed", rep.sign_coherence.failed},
                             {"exchange_pairs_failed", rep.exchange_pairs.failed},
                             {"product_polytopes_failed", rep.product_polytopes.failed},
                             {"product_tropical_failed", rep.product_tropical.failed},
                             {"pass", rep.all_passed()}};
            text << "identities " << type << ": " << (rep.all_passed() ? "pass" : "FAIL") << " ("
                 << rep.seeds << " seeds, " << rep.edges << " edge checks)\n";
            if (!rep.all_passed()) failed = true;
        }
        report["identities"] = per;
    }
    if (suite == "theoremA" || suite == "all") {
        json per = json::object();
        for (const auto& type : types) {
            ExchangeGraph graph = need_graph(type);
            TheoremAReport rep = verify_theorem_A(graph, degree_cap);
            per[type] = json{{"degree_cap", rep.degree_cap},
                             {"monomials", rep.monomial_count},
                             {"classes", rep.class_count},
                             {"injective", rep.injective},
                             {"suspects", rep.suspects.size()}};
            text << "theorem A " << type << ": " << rep.monomial_count << " monomials, "
                 << "injective: " << (rep.injective ? "true" : "false") << "\n";
            if (!rep.injective) failed = true;
        }
        report["theoremA"] = per;
    }
    if (suite == "theoremB" || suite == "theoremC" || suite == "all") {
        tau::Algebra alg(rank);
        if (suite == "theoremB" || suite == "all") {
            tau::InjectivityReport rep = tau::verify_theorem_B(alg, mult_cap);
            report["theoremB"] = json{{"rank", rank},
                                      {"candidates", rep.candidate_count},
                                      {"classes", rep.class_count},
                                      {"injective", rep.injective},
                                      {"sum_rigid", sweep_json(rep.sum_rigid)},
                                      {"exchange", sweep_json(rep.exchange)}};
            text << "theorem B rank " << rank << ": " << rep.candidate_count
                 << " candidates, injective: " << (rep.injective ? "true" : "false") << "\n";
            if (!rep.injective || rep.sum_rigid.failed || rep.exchange.failed) failed = true;
        }
        if (suite == "theoremC" || suite == "all") {
            tau::InjectivityReport rep = tau::verify_theorem_C(alg, mult_cap);
            report["theoremC"] = json{{"rank", rank},
                                      {"candidates", rep.candidate_count},
                                      {"classes", rep.class_count},
                                      {"injective", rep.injective},
                                      {"exchange", sweep_json(rep.exchange)},
                                      {"note", rep.note}};
            text << "theorem C rank " << rank << ": " << rep.candidate_count
                 << " candidates, injective: " << (rep.injective ? "true" : "false") << "\n";
            if (!rep.injective || rep.exchange.failed) failed = true;
        }
        if (suite == "all") {
            json sweeps;
            tau::SweepReport homs = tau::sweep_hom_oracle(alg);
            tau::SweepReport fe = tau::sweep_fe_hom(alg);
            tau::SweepReport fcheck = tau::sweep_check_f(alg);
            tau::SweepReport gmx = tau::sweep_g_mx(alg);
            tau::SweepReport fe2 = tau::sweep_f_equals_e(alg);
            tau::SweepReport dom = tau::sweep_dom_hom(alg);
            sweeps["hom_oracle"] = sweep_json(homs);
            sweeps["fe_hom"] = sweep_json(fe);
            sweeps["check_f"] = sweep_json(fcheck);
            sweeps["g_mx"] = sweep_json(gmx);
            sweeps["f_equals_e"] = sweep_json(fe2);
            sweeps["dom_hom"] = sweep_json(dom);
            tau::BijectionReport bij = tau::verify_bijection_counts(alg);
            sweeps["bijection"] = json{{"tilting_pairs", bij.tilting_pairs},
                                       {"torsion_classes", bij.torsion_classes},
                                       {"semibricks", bij.semibricks},
                                       {"consistent", bij.consistent}};
            report["tau_sweeps"] = sweeps;
            bool sweeps_ok = homs.clean() && fe.clean() && fcheck.clean() && gmx.clean() &&
                             fe2.clean() && dom.clean() && bij.consistent;
            text << "tau sweeps rank " << rank << ": " << (sweeps_ok ? "pass" : "FAIL") << "\n";
            if (!sweeps_ok) failed = true;
        }
    }
    if (report.empty()) throw input_error("unknown verify suite " + suite);
    report["pass"] = !failed;
    text << "result: " << (failed ? "FAIL" : "PASS") << "\n";
    emit(opts, report, text.str(), out);
    return failed ? 1 : 0;
}

int cmd_tau(const CommonOpts& opts, const std::string& sub, int rank, const std::string& side,
            int index, std::ostream& out) {
    tau::Algebra alg(rank);
    if (sub == "pairs") {
        auto catalog = tau::enumerate_tau_tilting_pairs(alg);
        json list = json::array();
        for (const auto& p : catalog) {
            json mods = json::array();
            for (auto m : p.modules) mods.push_back(to_json(m));
            json projs = json::array();
            for (int v : p.projectives) projs.push_back(v);
            list.push_back(json{{"modules", mods}, {"projectives", projs}});
        }
        json j{{"count", catalog.size()}, {"pairs", list}};
        std::ostringstream text;
        text << catalog.size() << " basic tau-tilting pairs at rank " << rank << "\n";
        for (const auto& p : catalog) text << "  " << tau::describe(p.decorated()) << "\n";
        emit(opts, j, text.str(), out);
        return 0;
    }
    if (sub == "gf") {
        tau::DecoratedModule d = decorated_from_json(read_input(opts), "input");
        std::vector<int> g = tau::g_vector(alg, d);
        YPolynomial f = tau::f_polynomial(alg, d.plus);
        json gj = json::array();
        for (int x : g) gj.push_back(x);
        json j{{"g", gj}, {"F", to_json(f)}, {"delta", [&] {
                   json dj = json::array();
                   for (int x : tau::delta_vector(alg, d)) dj.push_back(x);
                   return dj;
               }()}};
        std::ostringstream text;
        text << tau::describe(d) << ": g = (";
        for (std::size_t i = 0; i < g.size(); ++i) text << (i ? "," : "") << g[i];
        text << "), F has " << f.term_count() << " terms\n";
        emit(opts, j, text.str(), out);
        return 0;
    }
    if (sub == "bongartz") {
        tau::DecoratedModule d = decorated_from_json(read_input(opts), "input");
        auto catalog = tau::enumerate_tau_tilting_pairs(alg);
        tau::TauTiltingPair pair = tau::bongartz_pair(
            alg, catalog, d, side == "right" ? tau::Side::right : tau::Side::left);
        json j{{"completion", to_json(pair.decorated())}};
        emit(opts, j, tau::describe(pair.decorated()) + "\n", out);
        return 0;
    }
    if (sub == "bricks") {
        auto catalog = tau::enumerate_tau_tilting_pairs(alg);
        if (index < 0 || static_cast<std::size_t>(index) >= catalog.size())
            throw input_error("--index out of range; catalog has " +
                              std::to_string(catalog.size()) + " pairs");
        auto bricks = tau::labeling_semibrick(alg, catalog, catalog[static_cast<std::size_t>(index)]);
        json list = json::array();
        std::ostringstream text;
        text << "labeling semibrick of " << tau::describe(catalog[static_cast<std::size_t>(index)].decorated())
             << ":\n";
        for (const auto& [k, c] : bricks) {
            list.push_back(json{{"direction", k}, {"brick", to_json(c)}});
            text << "  direction " << k << ": M[" << c.a << "," << c.b << "]\n";
        }
        json j{{"bricks", list}};
        emit(opts, j, text.str(), out);
        return 0;
    }
    throw input_error("unknown tau subcommand " + sub);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cluster-algebra and tau-tilting workbench"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string dirs, suite, tau_sub, side = "left";
    int index = 1, degree_cap = 3, mult_cap = 3, rank = 4;

    CLI::App* mutate = app.add_subcommand("mutate", "mutate a seed along a direction sequence");
    add_common(mutate, opts);
    mutate->add_option("--dirs,-k", dirs, "mutation directions, e.g. \"1,2,1\"");

    CLI::App* explore_cmd = app.add_subcommand("explore", "breadth-first exchange graph");
    add_common(explore_cmd, opts);

    CLI::App* var = app.add_subcommand("var", "g-vector and F-polynomial of a seed variable");
    add_common(var, opts);
    var->add_option("--dirs,-k", dirs, "mutation directions from the initial seed");
    var->add_option("--index", index, "variable position, 1-based");

    CLI::App* trop = app.add_subcommand("trop", "tropical evaluation of a polynomial");
    add_common(trop, opts, false);

    CLI::App* finv = app.add_subcommand("finv", "F-invariant of two cluster monomials");
    add_common(finv, opts);

    CLI::App* bong = app.add_subcommand("bongartz", "left/right Bongartz completion");
    add_common(bong, opts);

    CLI::App* reduce = app.add_subcommand("reduce", "reduction trace for an equal-polytope pair");
    add_common(reduce, opts);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, opts);
    verify->add_option("suite", suite, "theoremA | identities | theoremB | theoremC | all")
        ->required()
        ->check(CLI::IsMember({"theoremA", "identities", "theoremB", "theoremC", "all"}));
    verify->add_option("--degree-cap", degree_cap, "monomial degree cap for theorem A");
    verify->add_option("--mult-cap", mult_cap, "multiplicity cap for theorems B and C");
    verify->add_option("--rank,-n", rank, "algebra rank for the tau side");

    CLI::App* tau_cmd = app.add_subcommand("tau", "tau-tilting operations on the type-A algebra");
    add_common(tau_cmd, opts, false);
    tau_cmd->add_option("sub", tau_sub, "pairs | gf | bongartz | bricks")->required();
    tau_cmd->add_option("--rank,-n", rank, "algebra rank");
    tau_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    tau_cmd->add_option("--index", index, "pair index for bricks (0-based catalog order)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    poly_term_cap() = opts.max_terms;
    try {
        if (mutate->parsed()) return cmd_mutate(opts, dirs, out);
        if (explore_cmd->parsed()) return cmd_explore(opts, out);
        if (var->parsed()) return cmd_var(opts, dirs, index, out);
        if (trop->parsed()) return cmd_trop(opts, out);
        if (finv->parsed()) return cmd_finv(opts, out);
        if (bong->parsed()) return cmd_bongartz(opts, out);
        if (reduce->parsed()) return cmd_reduce(opts, out);
        if (verify->parsed()) return cmd_verify(opts, suite, degree_cap, mult_cap, rank, out);
        if (tau_cmd->parsed()) return cmd_tau(opts, tau_sub, rank, side, index, out);
        err << "no command\n";
        return 2;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace clusterkit
