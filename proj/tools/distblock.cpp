// distblock: exact computations on distance matrices of multi-block graphs
// (blocks are complete multipartite), with closed forms verified against an
// exact rational linear-algebra oracle.

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "distblock/closed_forms.hpp"
#include "distblock/errors.hpp"
#include "distblock/exact_linalg.hpp"
#include "distblock/graph.hpp"
#include "distblock/serialization.hpp"
#include "distblock/singularity.hpp"
#include "distblock/spectral.hpp"
#include "distblock/sweep.hpp"
#include "distblock/t6_family.hpp"

namespace {

using namespace distblock;
using jsonio::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string format = "json";
    bool timing = false;  // timing breaks byte-identical reports; opt-in
    std::uint64_t seed = 1;
};

class Timer {
  public:
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_report(const Options& opt, json report, const Timer& timer) {
    if (opt.timing) report["timing_ms"] = timer.elapsed_ms();
    if (opt.format == "jsonl")
        std::cout << report.dump() << "\n";
    else
        std::cout << report.dump(2) << "\n";
}

json run_header(const std::string& command, const std::string& input) {
    return json{{"command", command}, {"input", input},
                {"input_digest", jsonio::digest(input)}};
}

// Splits "a=1,b=2" into a key/value map.
std::map<std::string, long> parse_params(const std::string& text) {
    std::map<std::string, long> out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw InvalidSpecError("parameter must look like key=value: " + tok);
        try {
            out[tok.substr(0, eq)] = std::stol(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidSpecError("bad parameter value: " + tok);
        }
    }
    return out;
}

long param_or(const std::map<std::string, long>& params, const std::string& key,
              long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

// ---- invariants -----------------------------------------------------------

int cmd_invariants(const Options& opt, const std::string& spec_text) {
    Timer timer;
    auto spec = MultipartiteSpec::parse(spec_text);
    auto inv = forms::invariants(spec);
    json report = run_header("invariants", spec_text);
    report["spec"] = spec.parts;
    report["vertex_count"] = spec.vertex_count();
    report["alpha"] = inv.alpha.get_str();
    report["beta"] = inv.beta.get_str();
    report["gamma"] = inv.gamma.get_str();
    report["det"] = forms::det_closed(spec).get_str();
    report["cof"] = forms::cof_closed(spec).get_str();
    if (inv.gamma != 0) {
        auto lam = singularity::lambda_single(spec);
        report["lambda"] = lam.lambda.to_string();
        if (lam.f) report["f"] = lam.f->to_string();
    }
    print_report(opt, report, timer);
    return kExitOk;
}

// ---- classify --------------------------------------------------------------

int cmd_classify(const Options& opt, const std::string& spec_text) {
    Timer timer;
    auto spec = MultipartiteSpec::parse(spec_text);
    json report = run_header("classify", spec_text);
    report.update(jsonio::verdict_to_json(singularity::classify(spec), spec));
    if (forms::gamma(spec.parts) != 0) {
        auto lam = singularity::lambda_single(spec);
        report["lambda"] = lam.lambda.to_string();
        report["lambda_sign"] = lam.sign == singularity::Sign::negative ? "negative"
                                : lam.sign == singularity::Sign::zero  ? "zero"
                                                                       : "positive";
    }
    print_report(opt, report, timer);
    return kExitOk;
}

// ---- enumerate --------------------------------------------------------------

int cmd_enumerate(const Options& opt, int m, long max_part, const std::string& filter) {
    if (m < 2) throw InvalidSpecError("enumerate needs --m >= 2");
    if (max_part < 1) throw InvalidSpecError("enumerate needs --max-part >= 1");
    if (max_part > 64 || m > 12)
        throw InvalidSpecError("enumeration budget exceeded (m <= 12, max-part <= 64)");

    auto specs = sweep::compositions(m * max_part, 2, max_part, m);
    if (opt.format == "csv") std::cout << "spec,det_zero,cof_zero,lambda\n";
    for (const auto& spec : specs) {
        auto verdict = singularity::classify(spec);
        bool lneg = false;
        std::string lambda_str;
        if (!verdict.cof.zero) {
            auto lam = singularity::lambda_single(spec);
            lneg = lam.sign == singularity::Sign::negative;
            lambda_str = lam.lambda.to_string();
        }
        bool keep = filter.empty() || (filter == "det0" && verdict.det.zero) ||
                    (filter == "cof0" && verdict.cof.zero) || (filter == "lneg" && lneg);
        if (!keep) continue;
        if (opt.format == "csv") {
            std::cout << spec.to_string() << ',' << verdict.det.zero << ','
                      << verdict.cof.zero << ',' << lambda_str << "\n";
        } else {
            json line = jsonio::verdict_to_json(verdict, spec);
            if (!lambda_str.empty()) line["lambda"] = lambda_str;
            std::cout << line.dump() << "\n";
        }
    }
    return kExitOk;
}

// ---- family ------------------------------------------------------------------

int cmd_family(const Options& opt, const std::string& kind, const std::string& params_text) {
    Timer timer;
    auto params = parse_params(params_text);
    json report = run_header("family", kind + " " + params_text);

    if (kind == "ex4.7" || kind == "ex4.8") {
        graphs::MultiBlockGraph g =
            kind == "ex4.7"
                ? singularity::zero_lambda_ex47(
                      static_cast<int>(param_or(params, "b1", 1)), param_or(params, "x", 1),
                      static_cast<int>(param_or(params, "b2", 0)), param_or(params, "y", 1),
                      static_cast<int>(param_or(params, "b3", 0)), param_or(params, "z", 1))
                : singularity::zero_lambda_ex48(param_or(params, "m", 1));
        auto [det, cof] = graphs::graham_compose(g);
        report["graph"] = jsonio::graph_to_json(g);
        report["lambda"] = "0";
        report["det"] = det.get_str();
        report["cof"] = cof.get_str();
    } else if (kind == "negative") {
        if (!params.contains("m") || !params.contains("k"))
            throw InvalidSpecError("negative family needs m=<int>,k=<int>[,seed=<int>]");
        auto spec = singularity::negative_lambda_family(
            static_cast<int>(params.at("m")), static_cast<int>(params.at("k")),
            param_or(params, "seed", 0));
        report["spec"] = spec.parts;
        report["lambda"] = singularity::lambda_single(spec).lambda.to_string();
    } else {
        throw InvalidSpecError("unknown family kind: " + kind +
                               " (expected ex4.7, ex4.8, or negative)");
    }
    print_report(opt, report, timer);
    return kExitOk;
}

// ---- compute -----------------------------------------------------------------

ExactMatrix closed_inverse(const graphs::MultiBlockGraph& g);

int cmd_compute(const Options& opt, const std::string& graph_arg, const std::string& what,
                bool verify) {
    Timer timer;
    auto g = jsonio::parse_graph_argument(graph_arg);
    json report = run_header("compute " + what, graph_arg);
    bool verified_ok = true;

    if (what == "det" || what == "cof") {
        auto [det, cof] = graphs::graham_compose(g);
        const Int& value = what == "det" ? det : cof;
        report[what] = value.get_str();
        if (verify) {
            ExactMatrix d = graphs::bfs_distances(g);
            Rational oracle = what == "det" ? linalg::determinant(d)
                                            : linalg::cofactor_sum(d);
            report["oracle"] = oracle.to_string();
            verified_ok = oracle == Rational(value);
            report["verified"] = verified_ok;
        }
    } else if (what == "lambda") {
        auto data = spectral::spectral_multiblock(g);
        report["lambda"] = data.lambda.to_string();
        if (verify) {
            // D mu = lambda 1 pins lambda against the assembled matrix
            auto rep = spectral::lapexp_check(graphs::bfs_distances(g), data.lambda,
                                              data.mu, data.lap_like);
            verified_ok = rep.all();
            report["verified"] = verified_ok;
        }
    } else if (what == "mu") {
        auto data = spectral::spectral_multiblock(g);
        json mu = json::array();
        for (const auto& v : data.mu) mu.push_back(v.to_string());
        report["mu"] = std::move(mu);
        if (verify) {
            auto rep = spectral::lapexp_check(graphs::bfs_distances(g), data.lambda,
                                              data.mu, data.lap_like);
            verified_ok = rep.all();
            report["verified"] = verified_ok;
        }
    } else if (what == "inverse") {
        ExactMatrix inv = closed_inverse(g);
        report["inverse"] = jsonio::matrix_to_json(inv);
        if (verify) {
            verified_ok = inv == linalg::inverse(graphs::bfs_distances(g));
            report["verified"] = verified_ok;
        }
    } else {
        throw InvalidSpecError("unknown --what: " + what);
    }

    print_report(opt, report, timer);
    return verified_ok ? kExitOk : kExitVerifyFailed;
}

// ---- inverse -----------------------------------------------------------------

// Closed-route inverse: the rank-one form when every block has cof != 0;
// the R-matrix form when the graph is the T_6-with-T_n-blocks family (whose
// central block has cof = 0).
ExactMatrix closed_inverse(const graphs::MultiBlockGraph& g) {
    for (const auto& blk : g.blocks) {
        if (forms::gamma(blk.spec().parts) != 0) continue;
        if (auto found = t6family::detect(g))
            return t6family::inverse_in_graph_order(*found);
        throw FormulaInapplicableError(
            "block K_{" + blk.spec().to_string() +
            "} has cof D = 0 and the graph is not the supported T_6 family; "
            "no closed-form inverse applies");
    }
    return spectral::inverse_multiblock(g);
}

int cmd_inverse(const Options& opt, const std::string& graph_arg,
                const std::string& method) {
    Timer timer;
    auto g = jsonio::parse_graph_argument(graph_arg);
    json report = run_header("inverse", graph_arg);
    bool equal = true;

    if (method == "closed") {
        report["inverse"] = jsonio::matrix_to_json(closed_inverse(g));
    } else if (method == "oracle") {
        report["inverse"] = jsonio::matrix_to_json(
            linalg::inverse(graphs::bfs_distances(g)));
    } else if (method == "both") {
        ExactMatrix closed = closed_inverse(g);
        ExactMatrix oracle = linalg::inverse(graphs::bfs_distances(g));
        equal = closed == oracle;
        report["inverse"] = jsonio::matrix_to_json(closed);
        report["methods_agree"] = equal;
    } else {
        throw InvalidSpecError("unknown --method: " + method);
    }
    print_report(opt, report, timer);
    return equal ? kExitOk : kExitVerifyFailed;
}

// ---- t6 -----------------------------------------------------------------------

int cmd_t6(const Options& opt, long n, long b, const std::string& emit, bool verify) {
    Timer timer;
    t6family::T6TnSpec spec(n, b);
    json report = run_header("t6", "n=" + std::to_string(n) + ",b=" + std::to_string(b));
    report["vertex_count"] = spec.vertex_count();
    report["det"] = t6family::det_t6_tn(spec).get_str();

    auto matrices = t6family::build_t6_tn(spec);
    if (emit == "D") report["matrix"] = jsonio::matrix_to_json(matrices.d);
    else if (emit == "L") report["matrix"] = jsonio::matrix_to_json(matrices.l);
    else if (emit == "R") report["matrix"] = jsonio::matrix_to_json(t6family::build_R(spec));
    else if (emit == "C") report["matrix"] = jsonio::matrix_to_json(t6family::inverse_t6_tn(spec));
    else if (!emit.empty()) throw InvalidSpecError("unknown --emit: " + emit);

    bool ok = true;
    if (verify) {
        const ExactMatrix& d = matrices.d;
        ExactMatrix c = t6family::inverse_t6_tn(spec);
        json checks;
        checks["det_matches_oracle"] =
            Rational(t6family::det_t6_tn(spec)) == linalg::determinant(d);
        checks["DC_is_identity"] = d * c == ExactMatrix::identity(d.rows());
        checks["CD_is_identity"] = c * d == ExactMatrix::identity(d.rows());
        checks["proof_steps"] = t6family::verify_steps(spec).all();
        checks["rank_one_obstruction"] = spectral::rank_one_obstruction(d);
        for (const auto& [key, value] : checks.items())
            if (!value.get<bool>()) ok = false;
        report["checks"] = std::move(checks);
        report["verified"] = ok;
    }
    print_report(opt, report, timer);
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---- sweep ---------------------------------------------------------------------

int cmd_sweep(const Options& opt, const std::string& suite, long max_vertices,
              int count, bool serial) {
    if (max_vertices < 2 || max_vertices > 16)
        throw InvalidSpecError("sweep budget: --max-vertices must be in [2, 16]");
    const auto exec = serial ? sweep::Exec::serial : sweep::Exec::parallel;

    std::vector<std::pair<std::string, std::function<sweep::Report()>>> suites;
    auto want = [&suite](const std::string& name) {
        return suite == "all" || suite == name;
    };
    if (want("closed"))
        suites.emplace_back("closed", [&] { return sweep::closed_vs_oracle(max_vertices, exec); });
    if (want("singularity"))
        suites.emplace_back("singularity",
                            [&] { return sweep::singularity_agreement(max_vertices, exec); });
    if (want("inverse"))
        suites.emplace_back("inverse",
                            [&] { return sweep::single_block_inverse(max_vertices, exec); });
    if (want("lapexp"))
        suites.emplace_back("lapexp",
                            [&] { return sweep::single_block_lapexp(max_vertices, exec); });
    if (want("multiblock"))
        suites.emplace_back("multiblock", [&] {
            return sweep::multiblock_random(count, 30, opt.seed, exec);
        });
    if (suites.empty()) throw InvalidSpecError("unknown --suite: " + suite);

    bool all_ok = true;
    for (auto& [name, fn] : suites) {
        auto rep = fn();
        json line{{"suite", name}, {"checked", rep.checked}, {"ok", rep.ok()}};
        if (!rep.ok()) {
            all_ok = false;
            line["first_failure"] = {{"item", rep.failures.front().item},
                                     {"detail", rep.failures.front().detail}};
            line["failure_count"] = rep.failures.size();
        }
        std::cout << line.dump() << "\n";
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distance-matrix computations for multi-block graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format: json, jsonl, csv")
        ->check(CLI::IsMember({"json", "jsonl", "csv"}));
    app.add_flag("--timing", opt.timing, "Include wall-clock timing in reports");
    app.add_option("--seed", opt.seed, "Seed for randomized suites");
    int jobs = 0;
    app.add_option("--jobs", jobs, "OpenMP thread count (0 = library default)");

    std::string spec_text, graph_arg, what = "det", method = "both", emit, filter,
                kind, params_text;
    bool verify = false, serial = false;
    int m = 3, count = 50;
    long max_part = 8, n = 7, b = 1, max_vertices = 12;

    auto* inv_cmd = app.add_subcommand("invariants", "alpha/beta/gamma of a composition");
    inv_cmd->add_option("spec", spec_text, "Composition, e.g. 1,1,4")->required();

    auto* cls_cmd = app.add_subcommand("classify", "det/cof vanishing verdicts");
    cls_cmd->add_option("spec", spec_text)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "Scan compositions with m parts");
    enum_cmd->add_option("--m", m, "Number of parts")->required();
    enum_cmd->add_option("--max-part", max_part, "Largest part size");
    enum_cmd->add_option("--filter", filter, "det0, cof0, or lneg")
        ->check(CLI::IsMember({"det0", "cof0", "lneg", ""}));

    auto* fam_cmd = app.add_subcommand("family", "Generate zero/negative lambda families");
    fam_cmd->add_option("--kind", kind, "ex4.7, ex4.8, or negative")->required();
    fam_cmd->add_option("--params", params_text, "key=value,... per kind");

    auto* comp_cmd = app.add_subcommand("compute", "Evaluate a quantity on a graph");
    comp_cmd->add_option("graph", graph_arg, "Graph JSON/file/shortcut")->required();
    comp_cmd->add_option("--what", what, "det, cof, lambda, mu, inverse");
    comp_cmd->add_flag("--verify", verify, "Cross-check against the oracle");

    auto* invq_cmd = app.add_subcommand("inverse", "Inverse of a distance matrix");
    invq_cmd->add_option("graph", graph_arg)->required();
    invq_cmd->add_option("--method", method, "closed, oracle, or both");

    auto* t6_cmd = app.add_subcommand("t6", "The T_6 + b T_n family");
    t6_cmd->add_option("--n", n)->required();
    t6_cmd->add_option("--b", b)->required();
    t6_cmd->add_option("--emit", emit, "D, L, R, or C");
    t6_cmd->add_flag("--verify", verify);

    auto* sweep_cmd = app.add_subcommand("sweep", "Verification sweeps");
    sweep_cmd->add_option("--suite", kind, "closed, singularity, inverse, lapexp, multiblock, all");
    sweep_cmd->add_option("--max-vertices", max_vertices);
    sweep_cmd->add_option("--count", count, "Random instances for the multiblock suite");
    sweep_cmd->add_flag("--serial", serial, "Use the serial reference kernels");

    // global flags (--format, --seed, ...) are accepted after the subcommand too
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (inv_cmd->parsed()) return cmd_invariants(opt, spec_text);
        if (cls_cmd->parsed()) return cmd_classify(opt, spec_text);
        if (enum_cmd->parsed()) return cmd_enumerate(opt, m, max_part, filter);
        if (fam_cmd->parsed()) return cmd_family(opt, kind, params_text);
        if (comp_cmd->parsed()) return cmd_compute(opt, graph_arg, what, verify);
        if (invq_cmd->parsed()) return cmd_inverse(opt, graph_arg, method);
        if (t6_cmd->parsed()) return cmd_t6(opt, n, b, emit, verify);
        if (sweep_cmd->parsed())
            return cmd_sweep(opt, kind.empty() ? "all" : kind, max_vertices, count, serial);
    } catch (const InvalidSpecError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const FormulaInapplicableError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}
