#include "distblock/sweep.hpp"

#include <random>

#include "distblock/closed_forms.hpp"
#include "distblock/graph.hpp"
#include "distblock/singularity.hpp"
#include "distblock/spectral.hpp"

namespace distblock::sweep {

Report run(std::size_t count,
           const std::function<std::optional<Failure>(std::size_t)>& check,
           Exec exec) {
    // An exception must not escape the parallel region; it becomes a failure
    // record instead.
    auto guarded = [&check](std::size_t i) -> std::optional<Failure> {
        try {
            return check(i);
        } catch (const std::exception& e) {
            return Failure{"item #" + std::to_string(i),
                           std::string("exception: ") + e.what()};
        }
    };
    std::vector<std::optional<Failure>> slots(count);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < count; ++i) slots[i] = guarded(i);
    } else {
        for (std::size_t i = 0; i < count; ++i) slots[i] = guarded(i);
    }
    Report rep;
    rep.checked = count;
    for (auto& s : slots)
        if (s) rep.failures.push_back(std::move(*s));
    return rep;
}

std::vector<MultipartiteSpec> compositions(long max_total, int min_m, long max_part,
                                           int fixed_m) {
    std::vector<MultipartiteSpec> out;
    std::vector<long> cur;
    long cap = max_part > 0 ? max_part : max_total;
    std::function<void(long, long)> rec = [&](long lo, long left) {
        const int m = static_cast<int>(cur.size());
        if (m >= 2 && (fixed_m == 0 ? m >= min_m : m == fixed_m)) out.emplace_back(cur);
        if (fixed_m != 0 && m >= fixed_m) return;
        for (long v = lo; v <= std::min(left, cap); ++v) {
            cur.push_back(v);
            rec(v, left - v);
            cur.pop_back();
        }
    };
    rec(1, max_total);
    return out;
}

namespace {

std::optional<Failure> fail(const std::string& item, const std::string& detail) {
    return Failure{item, detail};
}

}  // namespace

Report closed_vs_oracle(long max_vertices, Exec exec) {
    auto specs = compositions(max_vertices);
    return run(specs.size(), [&specs](std::size_t i) -> std::optional<Failure> {
        const auto& spec = specs[i];
        ExactMatrix d = graphs::build_multipartite(spec);
        Rational det = linalg::determinant(d, Exec::serial);
        Rational cof = linalg::cofactor_sum(d, Exec::serial);
        if (det != Rational(forms::det_closed(spec)))
            return fail(spec.to_string(), "det closed form " +
                        Rational(forms::det_closed(spec)).to_string() +
                        " != oracle " + det.to_string());
        if (cof != Rational(forms::cof_closed(spec)))
            return fail(spec.to_string(), "cof closed form " +
                        Rational(forms::cof_closed(spec)).to_string() +
                        " != oracle " + cof.to_string());
        return std::nullopt;
    }, exec);
}

Report singularity_agreement(long max_vertices, Exec exec) {
    auto specs = compositions(max_vertices);
    return run(specs.size(), [&specs](std::size_t i) -> std::optional<Failure> {
        const auto& spec = specs[i];
        ExactMatrix d = graphs::build_multipartite(spec);
        bool det_zero = linalg::determinant(d, Exec::serial).is_zero();
        bool cof_zero = linalg::cofactor_sum(d, Exec::serial).is_zero();
        auto verdict = singularity::classify(spec);
        if (verdict.det.zero != det_zero)
            return fail(spec.to_string(), "det verdict disagrees with oracle");
        if (verdict.cof.zero != cof_zero)
            return fail(spec.to_string(), "cof verdict disagrees with oracle");
        if (verdict.det.l && !verdict.det.l_bound_ok)
            return fail(spec.to_string(), "det case-2 witness violates the l-range");
        if (verdict.cof.l && !verdict.cof.l_bound_ok)
            return fail(spec.to_string(), "cof case-2 witness violates the l-range");
        return std::nullopt;
    }, exec);
}

Report single_block_inverse(long max_vertices, Exec exec) {
    auto specs = compositions(max_vertices);
    return run(specs.size(), [&specs](std::size_t i) -> std::optional<Failure> {
        const auto& spec = specs[i];
        if (forms::beta(spec.parts) == 0) return std::nullopt;  // singular
        ExactMatrix d = graphs::build_multipartite(spec);
        ExactMatrix inv = spectral::inverse_single_block(spec);
        const auto n = d.rows();
        if (inv * d != ExactMatrix::identity(n))
            return fail(spec.to_string(), "block inverse: C*D != I");
        if (d * inv != ExactMatrix::identity(n))
            return fail(spec.to_string(), "block inverse: D*C != I");
        if (forms::gamma(spec.parts) != 0) {
            auto mu = spectral::mu_single(spec);
            auto lap = spectral::lap_like_single(spec);
            ExactMatrix rank_one =
                -lap + forms::lambda_closed(spec).reciprocal() * outer(mu, mu);
            if (rank_one != inv)
                return fail(spec.to_string(),
                            "block inverse != -L + (1/lambda) mu mu'");
        }
        return std::nullopt;
    }, exec);
}

Report single_block_lapexp(long max_vertices, Exec exec) {
    auto specs = compositions(max_vertices);
    return run(specs.size(), [&specs](std::size_t i) -> std::optional<Failure> {
        const auto& spec = specs[i];
        if (forms::gamma(spec.parts) == 0) return std::nullopt;
        ExactMatrix d = graphs::build_multipartite(spec);
        auto rep = spectral::lapexp_check(d, forms::lambda_closed(spec),
                                          spectral::mu_single(spec),
                                          spectral::lap_like_single(spec));
        if (!rep.all())
            return fail(spec.to_string(), rep.left() ? "right LapExp conditions fail"
                                                     : "left LapExp conditions fail");
        return std::nullopt;
    }, exec);
}

Report multiblock_random(int count, int max_vertices, std::uint64_t seed, Exec exec) {
    // Pre-generate so the parallel fan-out sees a fixed instance list.
    std::vector<graphs::MultiBlockGraph> instances;
    std::mt19937_64 rng(seed);
    instances.reserve(count);
    for (int i = 0; i < count; ++i)
        instances.push_back(graphs::random_multiblock(rng, max_vertices, true));

    return run(instances.size(), [&instances](std::size_t i) -> std::optional<Failure> {
        const auto& g = instances[i];
        const std::string name = "graph#" + std::to_string(i) + " (" +
                                 std::to_string(g.vertex_count) + " vertices, " +
                                 std::to_string(g.blocks.size()) + " blocks)";
        ExactMatrix d = graphs::bfs_distances(g);
        if (graphs::block_path_distances(g) != d)
            return fail(name, "block-path distances != BFS distances");

        auto [det, cof] = graphs::graham_compose(g);
        if (linalg::determinant(d, Exec::serial) != Rational(det))
            return fail(name, "composed determinant != oracle determinant");
        if (linalg::cofactor_sum(d, Exec::serial) != Rational(cof))
            return fail(name, "composed cofactor != oracle cofactor sum");

        auto data = spectral::spectral_multiblock(g);
        auto lapexp = spectral::lapexp_check(d, data.lambda, data.mu, data.lap_like);
        if (!lapexp.all()) return fail(name, "LapExp conditions fail");

        if (!data.lambda.is_zero()) {
            ExactMatrix inv = spectral::inverse_multiblock(g);
            if (inv * d != ExactMatrix::identity(d.rows()))
                return fail(name, "rank-one inverse: C*D != I");
            if (inv != linalg::inverse(d))
                return fail(name, "rank-one inverse != oracle inverse");
        }
        return std::nullopt;
    }, exec);
}

}  // namespace distblock::sweep
