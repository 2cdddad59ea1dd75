#include "fplab/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fplab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ScenarioError(msg); }

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& require(const json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string(ctx) + ": missing key '" + key + "'");
    return *it;
}

std::vector<PieceSpec> parse_pieces(const json& arr, const char* ctx) {
    if (!arr.is_array() || arr.empty()) fail(std::string(ctx) + ": 'pieces' must be a nonempty array");
    std::vector<PieceSpec> out;
    for (const json& pj : arr) {
        PieceSpec p;
        p.from = require(pj, "from", ctx).get<double>();
        if (pj.contains("to") && !pj["to"].is_null()) p.to = pj["to"].get<double>();
        p.expr = require(pj, "expr", ctx).get<std::string>();
        out.push_back(std::move(p));
    }
    return out;
}

ScalarFunc parse_scalar_func(const json& j, const std::string& fallback_name) {
    try {
        if (j.is_string()) return ScalarFunc::single(fallback_name, j.get<std::string>());
        std::string name = j.value("name", fallback_name);
        return ScalarFunc(name, parse_pieces(require(j, "pieces", "scalar function"),
                                             "scalar function"));
    } catch (const ExprError& e) {
        throw ScenarioError("scalar function '" + fallback_name + "': " + e.what(), e.line, e.col);
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what());
    }
}

DistanceSpec parse_distance_spec(const json& j) {
    DistanceSpec d;
    if (j.contains("builtin")) {
        d.builtin = j["builtin"].get<std::string>();
        if (d.builtin != "euclidean" && d.builtin != "range-projection" && d.builtin != "max-pair")
            fail("distance: unknown builtin '" + d.builtin + "'");
        return d;
    }
    d.expr = require(j, "expr", "distance").get<std::string>();
    d.name = j.value("name", std::string("custom"));
    d.symmetric = j.value("symmetric", false);
    d.reflexive = j.value("reflexive", false);
    return d;
}

json scalar_func_json(const ScalarFunc& f) {
    const auto specs = f.specs();
    if (specs.size() == 1 && specs.front().from == 0.0 && !specs.front().to)
        return json(specs.front().expr);
    json pieces = json::array();
    for (const PieceSpec& p : specs) {
        json pj;
        pj["from"] = p.from;
        pj["to"] = p.to ? json(*p.to) : json(nullptr);
        pj["expr"] = p.expr;
        pieces.push_back(pj);
    }
    return json{{"name", f.name()}, {"pieces", pieces}};
}

json distance_spec_json(const DistanceSpec& d) {
    if (!d.builtin.empty()) return json{{"builtin", d.builtin}};
    return json{{"expr", d.expr},
                {"name", d.name},
                {"reflexive", d.reflexive},
                {"symmetric", d.symmetric}};
}

json witness_json(const Witness& w) {
    return json{{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

json report_json(const Report& r, const std::string& distance_name, bool contrast = false) {
    json j;
    j["check"] = r.check;
    j["distance"] = distance_name;
    if (contrast) j["contrast"] = true;
    j["verdict"] = to_string(r.verdict);
    j["tolerance"] = r.tolerance;
    j["samples_checked"] = r.samples_checked;
    if (r.n_max > 0) j["n_max"] = r.n_max;
    json ws = json::array();
    for (const Witness& w : r.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
    if (!r.series.empty()) j["series"] = r.series;
    if (!r.eps_delta.empty()) {
        json ed = json::array();
        for (auto [e, d] : r.eps_delta) ed.push_back(json::array({e, d}));
        j["eps_delta"] = ed;
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool wants(const Scenario& s, const char* check) {
    for (const std::string& c : s.checks)
        if (c == check) return true;
    return false;
}

} // namespace

const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> reg = {
        "triangle",       "uniformity",          "p_bounded",     "phi_class",
        "psi_class",      "tail_continuity",     "uniform_convergence",
        "p_continuity",   "asymptotic",          "boyd_wong",     "corollary_2_5",
        "pair_decay",     "bw_monotonicity",     "uniqueness",    "select_theorem"};
    return reg;
}

DistanceStructure Scenario::distance() const {
    if (distance_spec.builtin == "euclidean") return DistanceStructure::euclidean();
    if (distance_spec.builtin == "range-projection") return DistanceStructure::range_projection();
    if (distance_spec.builtin == "max-pair") return DistanceStructure::max_pair();
    DistanceStructure p = DistanceStructure::from_expr(distance_spec.name, distance_spec.expr, domain);
    p.declared_symmetric = distance_spec.symmetric;
    p.declared_reflexive = distance_spec.reflexive;
    return p;
}

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ScenarioError(std::string("syntax error: ") + e.what(), line, col);
    }

    try {
        Scenario s;
        s.name = require(j, "name", "scenario").get<std::string>();
        s.notes = j.value("notes", std::string());

        const json& dj = require(j, "domain", "scenario");
        double lo = require(dj, "lo", "domain").get<double>();
        double hi = require(dj, "hi", "domain").get<double>();
        const json& sj = require(dj, "sampler", "domain");
        std::string kind = require(sj, "kind", "sampler").get<std::string>();
        int count = require(sj, "count", "sampler").get<int>();
        if (kind == "grid") {
            s.domain = Domain::grid(lo, hi, count);
        } else if (kind == "seeded-random") {
            s.domain = Domain::random(lo, hi, count, sj.value("seed", 0ull));
        } else {
            fail("sampler: unknown kind '" + kind + "'");
        }

        if (j.contains("map") && !j["map"].is_null()) {
            const json& mj = j["map"];
            std::string mname = mj.value("name", std::string("T"));
            s.map.emplace(mname, parse_pieces(require(mj, "pieces", "map"), "map"), lo, hi);
        }

        s.distance_spec = parse_distance_spec(require(j, "distance", "scenario"));
        s.distance(); // validate expression distances eagerly

        if (j.contains("hypothesis") && !j["hypothesis"].is_null()) {
            const json& hj = j["hypothesis"];
            if (hj.contains("boyd_wong")) {
                s.hyp_kind = HypKind::BoydWong;
                s.hyp_func = parse_scalar_func(require(hj["boyd_wong"], "psi", "boyd_wong"), "psi");
            } else if (hj.contains("corollary_2_5")) {
                s.hyp_kind = HypKind::Corollary25;
                s.hyp_func =
                    parse_scalar_func(require(hj["corollary_2_5"], "phi", "corollary_2_5"), "phi");
            } else if (hj.contains("asymptotic")) {
                s.hyp_kind = HypKind::Asymptotic;
                const json& aj = hj["asymptotic"];
                std::vector<ScalarFunc> prefix;
                if (aj.contains("prefix")) {
                    int k = 1;
                    for (const json& fj : aj["prefix"])
                        prefix.push_back(parse_scalar_func(fj, "phi_" + std::to_string(k++)));
                }
                const json& tj = require(aj, "tail", "asymptotic");
                PhiSequence::TailKind tk;
                ScalarFunc tail = [&]() -> ScalarFunc {
                    if (tj.contains("constant")) {
                        tk = PhiSequence::TailKind::Constant;
                        return parse_scalar_func(tj["constant"], "phi_tail");
                    }
                    if (tj.contains("iterate")) {
                        tk = PhiSequence::TailKind::Iterate;
                        return parse_scalar_func(tj["iterate"], "phi_base");
                    }
                    fail("asymptotic tail: expected 'constant' or 'iterate'");
                }();
                ScalarFunc limit = parse_scalar_func(require(aj, "limit", "asymptotic"), "phi");
                s.hyp_seq.emplace(std::move(prefix), tk, std::move(tail), std::move(limit));
            } else {
                fail("hypothesis: expected boyd_wong, asymptotic or corollary_2_5");
            }
        }

        if (j.contains("checks")) {
            for (const json& cj : j["checks"]) {
                std::string c = cj.get<std::string>();
                const auto& reg = check_registry();
                if (std::find(reg.begin(), reg.end(), c) == reg.end())
                    fail("checks: unknown check identifier '" + c + "'");
                s.checks.push_back(std::move(c));
            }
        }

        s.n_max = j.value("n_max", 16);
        s.tol = j.value("tol", 1e-9);
        if (j.contains("eps_grid")) s.eps_grid = j["eps_grid"].get<std::vector<double>>();

        if (j.contains("solver") && !j["solver"].is_null()) {
            const json& vj = j["solver"];
            SolverSpec sp;
            sp.starts = require(vj, "starts", "solver").get<std::vector<double>>();
            sp.tol = vj.value("tol", 1e-9);
            sp.max_iter = vj.value("max_iter", 10000);
            sp.window = vj.value("window", 3);
            s.solver = sp;
        }

        if (j.contains("contrast") && !j["contrast"].is_null()) {
            ContrastSpec c;
            c.distance = parse_distance_spec(require(j["contrast"], "distance", "contrast"));
            if (j["contrast"].contains("count")) c.count = j["contrast"]["count"].get<int>();
            s.contrast = c;
        }

        // Cross-field validation.
        static const char* kNeedsMap[] = {"p_continuity", "asymptotic", "boyd_wong",
                                          "corollary_2_5", "pair_decay", "bw_monotonicity",
                                          "uniqueness"};
        for (const char* c : kNeedsMap)
            if (wants(s, c) && !s.map) fail(std::string("check '") + c + "' requires a map");
        if ((wants(s, "phi_class") || wants(s, "psi_class")) && s.hyp_kind == HypKind::None)
            fail("class checks require a hypothesis function");
        if (wants(s, "asymptotic") && s.hyp_kind != HypKind::Asymptotic)
            fail("check 'asymptotic' requires an asymptotic hypothesis");
        if ((wants(s, "boyd_wong") || wants(s, "bw_monotonicity")) &&
            s.hyp_kind != HypKind::BoydWong)
            fail("Boyd-Wong checks require a boyd_wong hypothesis");
        if (wants(s, "corollary_2_5") && s.hyp_kind != HypKind::Corollary25)
            fail("check 'corollary_2_5' requires a corollary_2_5 hypothesis");
        if ((wants(s, "uniform_convergence") || wants(s, "tail_continuity")) &&
            s.hyp_kind != HypKind::Asymptotic)
            fail("sequence checks require an asymptotic hypothesis");
        if (s.solver && !s.map) fail("solver requires a map");

        return s;
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what());
    } catch (const ExprError& e) {
        throw ScenarioError(e.what(), e.line, e.col);
    }
}

json serialize_scenario(const Scenario& s) {
    json j;
    j["name"] = s.name;
    if (!s.notes.empty()) j["notes"] = s.notes;
    json dj;
    dj["lo"] = s.domain.lo;
    dj["hi"] = s.domain.hi;
    json sj;
    sj["kind"] = s.domain.sampler == Domain::Sampler::Grid ? "grid" : "seeded-random";
    sj["count"] = s.domain.count;
    if (s.domain.sampler == Domain::Sampler::Random) sj["seed"] = s.domain.seed;
    dj["sampler"] = sj;
    j["domain"] = dj;

    if (s.map) {
        json pieces = json::array();
        for (const PieceSpec& p : s.map->specs()) {
            json pj;
            pj["from"] = p.from;
            pj["to"] = p.to ? json(*p.to) : json(nullptr);
            pj["expr"] = p.expr;
            pieces.push_back(pj);
        }
        j["map"] = json{{"name", s.map->name()}, {"pieces", pieces}};
    }

    j["distance"] = distance_spec_json(s.distance_spec);

    switch (s.hyp_kind) {
        case HypKind::None: break;
        case HypKind::BoydWong:
            j["hypothesis"] = json{{"boyd_wong", json{{"psi", scalar_func_json(*s.hyp_func)}}}};
            break;
        case HypKind::Corollary25:
            j["hypothesis"] = json{{"corollary_2_5", json{{"phi", scalar_func_json(*s.hyp_func)}}}};
            break;
        case HypKind::Asymptotic: {
            json aj;
            json prefix = json::array();
            for (const ScalarFunc& f : s.hyp_seq->explicit_prefix())
                prefix.push_back(scalar_func_json(f));
            aj["prefix"] = prefix;
            const char* tk = s.hyp_seq->tail_kind() == PhiSequence::TailKind::Constant
                                 ? "constant"
                                 : "iterate";
            aj["tail"] = json{{tk, scalar_func_json(s.hyp_seq->tail())}};
            aj["limit"] = scalar_func_json(s.hyp_seq->limit());
            j["hypothesis"] = json{{"asymptotic", aj}};
            break;
        }
    }

    j["checks"] = s.checks;
    j["n_max"] = s.n_max;
    j["tol"] = s.tol;
    j["eps_grid"] = s.eps_grid;
    if (s.solver) {
        json vj;
        vj["starts"] = s.solver->starts;
        vj["tol"] = s.solver->tol;
        vj["max_iter"] = s.solver->max_iter;
        vj["window"] = s.solver->window;
        j["solver"] = vj;
    }
    if (s.contrast) {
        json cj;
        cj["distance"] = distance_spec_json(s.contrast->distance);
        if (s.contrast->count) cj["count"] = *s.contrast->count;
        j["contrast"] = cj;
    }
    return j;
}

json run_scenario(const Scenario& s, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();

    Domain dom = s.domain;
    if (opt.grid_count) dom.count = *opt.grid_count;
    if (opt.seed) {
        dom.sampler = Domain::Sampler::Random;
        dom.seed = *opt.seed;
    }
    const double tol = opt.tol.value_or(s.tol);
    const int n_max = opt.n_max.value_or(s.n_max);

    DistanceStructure p = s.distance();

    json checks = json::array();
    SelectorInput sel;

    // Target of the class checks by hypothesis kind.
    const ScalarFunc* class_target = nullptr;
    if (s.hyp_kind == HypKind::Asymptotic)
        class_target = &s.hyp_seq->limit();
    else if (s.hyp_func)
        class_target = &*s.hyp_func;

    checks.push_back(report_json(validate_distance(p, dom, tol), p.name));

    if (wants(s, "triangle"))
        checks.push_back(report_json(check_triangle(p, dom, tol), p.name));
    if (wants(s, "uniformity"))
        checks.push_back(report_json(check_uniformity_compat(p, dom, s.eps_grid, tol), p.name));

    double delta_p = 0.0;
    if (wants(s, "p_bounded") || wants(s, "uniform_convergence")) {
        BoundednessResult b = check_p_bounded(p, dom);
        delta_p = b.estimate;
        if (wants(s, "p_bounded")) checks.push_back(report_json(b.report, p.name));
    }

    if (wants(s, "phi_class")) {
        auto r = check_phi_class(*class_target, default_class_grid(*class_target, delta_p), tol);
        checks.push_back(report_json(r, p.name));
    }
    if (wants(s, "psi_class")) {
        auto r = check_psi_class(*class_target, default_class_grid(*class_target, delta_p), tol);
        sel.psi_membership = r;
        checks.push_back(report_json(r, p.name));
    }
    if (wants(s, "tail_continuity")) {
        auto r = check_continuity(s.hyp_seq->tail(), tol);
        r.check = "tail_continuity";
        sel.tail_continuity = r;
        checks.push_back(report_json(r, p.name));
    }
    if (wants(s, "uniform_convergence")) {
        auto r = check_uniform_convergence(*s.hyp_seq, std::max(delta_p, 1.0), n_max, tol);
        sel.uniform_convergence = r;
        checks.push_back(report_json(r, p.name));
    }
    if (wants(s, "p_continuity")) {
        auto r = check_p_continuity(*s.map, p, dom, tol);
        sel.p_continuity = r;
        checks.push_back(report_json(r, p.name));
    }

    // Contrast runs reuse the hypothesis under an alternative distance, on an
    // optionally coarser grid.
    auto contrast_ctx = [&]() -> std::pair<DistanceStructure, Domain> {
        Scenario tmp = s;
        tmp.distance_spec = s.contrast->distance;
        Domain cdom = dom;
        if (s.contrast->count) cdom.count = *s.contrast->count;
        return {tmp.distance(), cdom};
    };

    if (wants(s, "asymptotic")) {
        auto r = check_asymptotic(*s.map, p, *s.hyp_seq, dom, n_max, tol);
        sel.asymptotic = r;
        checks.push_back(report_json(r, p.name));
        if (s.contrast) {
            auto [cp, cdom] = contrast_ctx();
            checks.push_back(
                report_json(check_asymptotic(*s.map, cp, *s.hyp_seq, cdom, n_max, tol), cp.name,
                            true));
        }
    }
    if (wants(s, "boyd_wong")) {
        auto r = check_boyd_wong(*s.map, p, *s.hyp_func, dom, tol);
        sel.boyd_wong = r;
        checks.push_back(report_json(r, p.name));
        if (s.contrast) {
            auto [cp, cdom] = contrast_ctx();
            checks.push_back(
                report_json(check_boyd_wong(*s.map, cp, *s.hyp_func, cdom, tol), cp.name, true));
        }
    }
    if (wants(s, "corollary_2_5")) {
        auto r = check_corollary_2_5(*s.map, p, *s.hyp_func, dom, n_max, tol);
        checks.push_back(report_json(r, p.name));
        if (s.contrast) {
            auto [cp, cdom] = contrast_ctx();
            checks.push_back(
                report_json(check_corollary_2_5(*s.map, cp, *s.hyp_func, cdom, n_max, tol),
                            cp.name, true));
        }
    }
    if (wants(s, "pair_decay"))
        checks.push_back(report_json(pair_decay_check(*s.map, p, dom, n_max, tol), p.name));
    if (wants(s, "bw_monotonicity"))
        checks.push_back(
            report_json(boyd_wong_monotonicity_check(*s.map, p, *s.hyp_func, dom, n_max, tol),
                        p.name));
    if (wants(s, "uniqueness"))
        checks.push_back(report_json(uniqueness_probe(*s.map, p, dom, tol), p.name));

    json out;
    out["artifact_version"] = kArtifactVersion;
    out["schema_version"] = kSchemaVersion;
    out["scenario"] = serialize_scenario(s);
    out["input_digest"] = [&] {
        std::ostringstream hex;
        hex << "fnv1a:" << std::hex << fnv1a(serialize_scenario(s).dump());
        return hex.str();
    }();
    out["checks"] = checks;

    if (wants(s, "select_theorem")) {
        json ph = json::array();
        if (s.hyp_kind == HypKind::Asymptotic) {
            int k = 1;
            for (const ScalarFunc& f : s.hyp_seq->explicit_prefix()) {
                auto r = check_phi_class(f, default_class_grid(f, delta_p), tol);
                sel.phi_k_membership.emplace_back(k, r.verdict);
                ph.push_back(json{{"index", k}, {"verdict", to_string(r.verdict)}});
                ++k;
            }
        }
        TheoremVerdict tv = select_theorem(sel);
        out["theorem"] = json{{"guarantee", to_string(tv.guarantee)},
                              {"passed", tv.passed},
                              {"failed", tv.failed},
                              {"phi_k_membership", ph}};
    } else {
        out["theorem"] = nullptr;
    }

    if (s.solver && s.map) {
        const SolverSpec& sp = *s.solver;
        ConvergenceReport cr = equiconvergence(*s.map, p, dom, sp.starts, sp.tol, sp.max_iter,
                                               sp.window);
        json sv;
        sv["starts"] = sp.starts;
        sv["tol"] = sp.tol;
        sv["max_iter"] = sp.max_iter;
        sv["window"] = sp.window;
        sv["candidate"] = cr.candidate ? json(*cr.candidate) : json(nullptr);
        sv["equiconvergent"] = cr.equiconvergent;
        // Window-based surrogate for the p-Cauchy property of Step 2;
        // pair_decay above is the closer analogue of Step 1.
        bool all_converged = true;
        for (const PicardTrace& tr : cr.traces)
            all_converged = all_converged && tr.verdict == TraceVerdict::Converged;
        sv["cauchy"] = all_converged ? "PASS" : "FAIL";
        sv["cauchy_note"] = "two-sided consecutive p-distance window criterion";
        if (cr.fixed_point) {
            sv["fixed_point"] = json{{"p_forward", cr.fixed_point->p_forward},
                                     {"p_backward", cr.fixed_point->p_backward},
                                     {"metric_residual", cr.fixed_point->metric_residual},
                                     {"fixed", cr.fixed_point->fixed}};
        } else {
            sv["fixed_point"] = nullptr;
        }
        json traces = json::array();
        for (const PicardTrace& tr : cr.traces) {
            json tj;
            tj["start"] = tr.start;
            tj["verdict"] = to_string(tr.verdict);
            tj["stopped_at"] = tr.stopped_at;
            tj["candidate"] = tr.candidate();
            json head = json::array();
            for (std::size_t i = 0; i < tr.iterates.size() && i < 12; ++i)
                head.push_back(tr.iterates[i]);
            tj["iterates_head"] = head;
            json fh = json::array(), bh = json::array();
            for (std::size_t i = 0; i < tr.fwd_dist.size() && i < 12; ++i) {
                fh.push_back(tr.fwd_dist[i]);
                bh.push_back(tr.bwd_dist[i]);
            }
            tj["fwd_dist_head"] = fh;
            tj["bwd_dist_head"] = bh;
            traces.push_back(tj);
        }
        sv["traces"] = traces;
        out["solver"] = sv;
    } else {
        out["solver"] = nullptr;
    }

    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        out["wall_time_ms"] = ms;
    }
    return out;
}

std::string report_to_string(const json& report) { return report.dump(2) + "\n"; }

std::string corpus_text(const std::string& name) {
    if (const char* dir = std::getenv("FPLAB_CORPUS_DIR")) {
        std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }
    extern const std::pair<const char*, const char*> kCorpus[];
    extern const std::size_t kCorpusSize;
    for (std::size_t i = 0; i < kCorpusSize; ++i)
        if (name == kCorpus[i].first) return kCorpus[i].second;
    throw ScenarioError("unknown corpus scenario '" + name + "'");
}

std::vector<std::string> corpus_list() {
    extern const std::pair<const char*, const char*> kCorpus[];
    extern const std::size_t kCorpusSize;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < kCorpusSize; ++i) names.emplace_back(kCorpus[i].first);
    return names;
}

} // namespace fplab
