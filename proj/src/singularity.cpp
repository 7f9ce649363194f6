#include "distblock/singularity.hpp"

#include <algorithm>
#include <functional>

#include "distblock/closed_forms.hpp"
#include "distblock/errors.hpp"

namespace distblock::singularity {

std::string Verdict::case_name() const {
    switch (which) {
        case SingularCase::two_twos: return "case-1";
        case SingularCase::reciprocal_equality: return "case-2";
        default: return "nonsingular";
    }
}

namespace {

// Shared engine for the det/cof characterizations; they differ only in the
// reciprocal target (2l - (m+1) vs 2l - m) and the l-range.
Verdict classify_impl(const MultipartiteSpec& spec, bool for_det) {
    const auto sorted = spec.sorted();
    const long m = static_cast<long>(sorted.part_count());

    Verdict v;
    long twos = static_cast<long>(
        std::count(sorted.parts.begin(), sorted.parts.end(), 2L));
    if (twos >= 2) {
        v.zero = true;
        v.which = SingularCase::two_twos;
        return v;
    }
    if (twos == 1) return v;  // exactly one 2: det = cof != 0, lambda = 1

    long l = static_cast<long>(
        std::count(sorted.parts.begin(), sorted.parts.end(), 1L));
    std::vector<long> tail(sorted.parts.begin() + l, sorted.parts.end());

    Rational sum;  // 2 * sum 1/(n_i - 2) over the > 2 tail
    for (long n : tail) sum += Rational(2, n - 2);
    long target = for_det ? 2 * l - (m + 1) : 2 * l - m;

    if (sum == Rational(target)) {
        v.zero = true;
        v.which = SingularCase::reciprocal_equality;
        v.l = l;
        v.tail = tail;
        v.l_bound_ok = for_det ? (2 * l > m + 1 && 4 * l <= 3 * m + 1)
                               : (2 * l > m && 4 * l <= 3 * m);
    }
    return v;
}

}  // namespace

Verdict classify_det(const MultipartiteSpec& spec) { return classify_impl(spec, true); }
Verdict classify_cof(const MultipartiteSpec& spec) { return classify_impl(spec, false); }

SingularityVerdict classify(const MultipartiteSpec& spec) {
    return {classify_det(spec), classify_cof(spec)};
}

LambdaSignReport lambda_single(const MultipartiteSpec& spec) {
    LambdaSignReport rep;
    rep.lambda = forms::lambda_closed(spec);  // throws when cof = 0
    int s = rep.lambda.sign();
    rep.sign = s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero;

    if (std::none_of(spec.parts.begin(), spec.parts.end(),
                     [](long n) { return n == 2; })) {
        Rational f;
        for (long n : spec.parts) f += Rational(n, n - 2);
        rep.f = f;
        if (rep.lambda != Rational(1) + f.reciprocal())
            throw Error("lambda != 1 + 1/f for K_{" + spec.to_string() + "}");
    }
    return rep;
}

namespace {

void enumerate_sorted(std::vector<long>& cur, long lo, long budget, int left,
                      const std::function<void(const std::vector<long>&)>& emit) {
    if (left == 0) {
        emit(cur);
        return;
    }
    for (long v = lo; v <= budget; ++v) {
        cur.push_back(v);
        enumerate_sorted(cur, v, budget, left - 1, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultipartiteSpec> negative_lambda_classifier(int m, long budget) {
    if (m < 2) throw InvalidSpecError("classifier needs m >= 2");
    std::vector<MultipartiteSpec> out;
    std::vector<long> cur;
    enumerate_sorted(cur, 1, budget, m, [&out](const std::vector<long>& parts) {
        Int g = forms::gamma(parts);
        if (g == 0) return;
        Int b = forms::beta(parts);
        if (sgn(b) * sgn(g) < 0) out.emplace_back(parts);
    });
    return out;
}

std::vector<int> admissible_family_cases(int m) {
    std::vector<int> ks;
    if (m < 5) return ks;
    int x = m / 4;
    switch (m % 4) {
        case 0:  // q = 2x - 2k + 1 must be >= 2
            for (int k = 1; k <= x - 1; ++k) ks.push_back(k);
            break;
        case 1:  // q = 2x + 2 - 2k >= 1
            for (int k = 1; k <= x; ++k) ks.push_back(k);
            break;
        case 2:  // q = 2x + 4 - 2k >= 2
            for (int k = 2; k <= x + 1; ++k) ks.push_back(k);
            break;
        default:  // q = 2x + 5 - 2k >= 1
            for (int k = 2; k <= x + 2; ++k) ks.push_back(k);
            break;
    }
    return ks;
}

MultipartiteSpec negative_lambda_family(int m, int k, long seed) {
    auto ks = admissible_family_cases(m);
    if (std::find(ks.begin(), ks.end(), k) == ks.end())
        throw InvalidSpecError("no infinite family for (m=" + std::to_string(m) +
                               ", k=" + std::to_string(k) + ")");
    if (seed < 0) throw InvalidSpecError("seed must be >= 0");

    const int x = m / 4;
    const long l = 2L * x + k;
    long p = 0, q = 0;
    bool half_open_low = false;  // interval (p + 1/2, p + 1) vs (p, p + 1/2)
    switch (m % 4) {
        case 0: p = k - 1; q = 2L * x - 2 * k + 1; half_open_low = true; break;
        case 1: p = k - 1; q = 2L * x + 2 - 2 * k; break;
        case 2: p = k - 2; q = 2L * x + 4 - 2 * k; half_open_low = true; break;
        default: p = k - 2; q = 2L * x + 5 - 2 * k; break;
    }

    std::vector<long> parts(l, 1);
    parts.insert(parts.end(), p, 3);  // each 3 contributes a full unit
    if (half_open_low) {
        // sum over the tail = 1/2 + 1/n, strictly inside (1/2, 1)
        long n = 3 + seed;
        parts.push_back(4);
        parts.insert(parts.end(), q - 1, n * (q - 1) + 2);
    } else {
        // q equal parts above 2(q+1): sum strictly inside (0, 1/2)
        long big = 2 * (q + 1) + 1 + seed;
        parts.insert(parts.end(), q, big);
    }

    MultipartiteSpec spec(parts);
    auto rep = lambda_single(spec);  // throws if cof = 0
    if (rep.sign != Sign::negative)
        throw Error("family generator produced a non-negative lambda for K_{" +
                    spec.to_string() + "}");
    return spec;
}

namespace {

graphs::MultiBlockGraph star_with_zero_lambda(std::vector<MultipartiteSpec> specs) {
    auto g = graphs::star_graph(specs);
    Rational total;
    for (const auto& blk : g.blocks) total += forms::lambda_closed(blk.spec());
    if (!total.is_zero())
        throw Error("zero-lambda construction produced lambda = " + total.to_string());
    return g;
}

}  // namespace

graphs::MultiBlockGraph zero_lambda_ex47(int b1, long x, int b2, long y, int b3, long z) {
    if (b1 < 0 || b2 < 0 || b3 < 0 || b1 + b2 + b3 == 0)
        throw InvalidSpecError("need a positive number of T_3/T_4/T_5 blocks");
    if ((b1 > 0 && x < 1) || (b2 > 0 && y < 1) || (b3 > 0 && z < 1))
        throw InvalidSpecError("companion block counts must be >= 1");

    std::vector<MultipartiteSpec> specs;
    for (int i = 0; i < b1; ++i) {
        specs.push_back(t_n(3));
        specs.insert(specs.end(), x, t_n(3 * x + 6));
    }
    for (int i = 0; i < b2; ++i) {
        specs.push_back(t_n(4));
        specs.insert(specs.end(), y, t_n(2 * y + 6));
    }
    for (int i = 0; i < b3; ++i) {
        specs.push_back(t_n(5));
        specs.insert(specs.end(), z, t_n(z + 6));
    }
    return star_with_zero_lambda(std::move(specs));
}

graphs::MultiBlockGraph zero_lambda_ex48(long m) {
    if (m < 1 || m == 2)
        throw InvalidSpecError("the K_4 + K_{m,m} + T_n family needs m in N \\ {2}");
    std::vector<MultipartiteSpec> specs;
    specs.push_back(MultipartiteSpec({1, 1, 1, 1}));
    specs.push_back(MultipartiteSpec({m, m}));
    specs.insert(specs.end(), 9 * m - 4, t_n(6 + 8 * m));
    return star_with_zero_lambda(std::move(specs));
}

}  // namespace distblock::singularity
