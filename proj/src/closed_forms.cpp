#include "distblock/closed_forms.hpp"

#include <sstream>

#include "distblock/errors.hpp"
#include "distblock/exact_linalg.hpp"

namespace distblock::forms {

Int alpha(const std::vector<long>& indices) {
    Int a = 1;
    for (long n : indices) a *= Int(n - 2);
    return a;
}

Int gamma(const std::vector<long>& indices) {
    Int g = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        Int term = indices[i];
        for (std::size_t j = 0; j < indices.size(); ++j)
            if (j != i) term *= Int(indices[j] - 2);
        g += term;
    }
    return g;
}

Int beta(const std::vector<long>& indices) { return gamma(indices) + alpha(indices); }

AlgebraicInvariants invariants(const std::vector<long>& indices) {
    AlgebraicInvariants inv;
    inv.alpha = alpha(indices);
    inv.gamma = gamma(indices);
    inv.beta = inv.gamma + inv.alpha;
    inv.indices = indices;
    return inv;
}

std::vector<long> erase_index(const std::vector<long>& indices, std::size_t i) {
    std::vector<long> out;
    out.reserve(indices.size() - 1);
    for (std::size_t k = 0; k < indices.size(); ++k)
        if (k != i) out.push_back(indices[k]);
    return out;
}

std::vector<long> erase_pair(const std::vector<long>& indices, std::size_t i, std::size_t j) {
    std::vector<long> out;
    out.reserve(indices.size() - 2);
    for (std::size_t k = 0; k < indices.size(); ++k)
        if (k != i && k != j) out.push_back(indices[k]);
    return out;
}

namespace {

Int pow_neg2(long e) {
    Int p = 1;
    for (long i = 0; i < e; ++i) p *= -2;
    return p;
}

}  // namespace

Int cof_closed(const MultipartiteSpec& spec) {
    return pow_neg2(spec.vertex_count() - static_cast<long>(spec.part_count())) *
           gamma(spec.parts);
}

Int det_closed(const MultipartiteSpec& spec) {
    return pow_neg2(spec.vertex_count() - static_cast<long>(spec.part_count())) *
           beta(spec.parts);
}

Rational lambda_closed(const MultipartiteSpec& spec) {
    Int g = gamma(spec.parts);
    if (g == 0)
        throw FormulaInapplicableError("lambda undefined: cof D = 0 for K_{" +
                                       spec.to_string() + "}");
    return Rational(beta(spec.parts), g);
}

Int det_Cm(const std::vector<long>& n) {
    const std::size_t m = n.size();
    if (m < 1) throw InvalidSpecError("det_Cm needs at least one index");

    ExactMatrix c(m, m);
    c(0, 0) = Int(n[0]);
    for (std::size_t j = 1; j < m; ++j) c(0, j) = Int(2 * (n[0] - 1));
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            c(i, j) = i == j ? Int(2) : Int(n[i]);

    Rational direct = linalg::determinant(c);

    Int closed = gamma(n);
    if (m % 2 == 0) closed = -closed;

    if (direct != Rational(closed))
        throw Error("det_Cm: matrix determinant disagrees with the closed form");
    return closed;
}

std::vector<long> reciprocal_sum_solution(long p, long r) {
    if (p < 1) throw InvalidSpecError("reciprocal_sum_solution: p must be positive");
    if (r < 1 || r > 2 * p)
        throw InvalidSpecError("reciprocal_sum_solution: r must satisfy 1 <= r <= 2p");

    std::vector<long> q;
    q.reserve(p);
    if (r % 2 == 0) {
        long k = r / 2;
        for (long i = 1; i <= k - 1; ++i) q.push_back(1);
        for (long i = k; i <= p; ++i) q.push_back(p + 1 - k);
    } else if (r == 1) {
        for (long i = 0; i < p; ++i) q.push_back(2 * p);
    } else {
        long k = (r - 1) / 2;
        for (long i = 1; i <= k; ++i) q.push_back(1);
        for (long i = k + 1; i <= p; ++i) q.push_back(2 * (p - k));
    }
    return q;
}

namespace {

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << '}';
    return os.str();
}

void expect(IdentityReport& rep, bool ok, const std::string& name,
            const std::string& operands) {
    ++rep.checked;
    if (!ok) rep.failures.push_back({name, operands});
}

}  // namespace

IdentityReport identity_suite(const std::vector<long>& indices, std::size_t subset_cap) {
    const std::size_t m = indices.size();
    if (m < 2) throw InvalidSpecError("identity_suite needs at least 2 indices");
    IdentityReport rep;

    const Int a_full = alpha(indices);
    const Int b_full = beta(indices);
    const Int g_full = gamma(indices);

    expect(rep, b_full == g_full + a_full, "beta = gamma + alpha", join(indices));

    // Subset recurrences: gamma_I = a_Jc g_J + a_J g_Jc and
    // beta_I = a_Jc b_J + a_J g_Jc, for proper subsets J (the empty subset
    // included; it exercises the empty-set conventions).
    if (m <= 20) {
        const std::size_t limit = std::size_t{1} << m;
        for (std::size_t mask = 0; mask + 1 < limit; ++mask) {
            std::vector<long> sub, comp;
            for (std::size_t k = 0; k < m; ++k)
                (mask >> k & 1U ? sub : comp).push_back(indices[k]);
            if (sub.size() > subset_cap) continue;
            Int lhs_g = alpha(comp) * gamma(sub) + alpha(sub) * gamma(comp);
            Int lhs_b = alpha(comp) * beta(sub) + alpha(sub) * gamma(comp);
            expect(rep, g_full == lhs_g, "gamma subset recurrence",
                   join(indices) + " J=" + join(sub));
            expect(rep, b_full == lhs_b, "beta subset recurrence",
                   join(indices) + " J=" + join(sub));
        }
    }

    // Deletion identity (a): n_u (gamma_hat_u + 2 alpha_hat_u) - beta = 2 beta_hat_u.
    for (std::size_t u = 0; u < m; ++u) {
        auto del = erase_index(indices, u);
        Int lhs = Int(indices[u]) * (gamma(del) + 2 * alpha(del)) - b_full;
        expect(rep, lhs == 2 * beta(del), "identity (a)",
               join(indices) + " u=" + std::to_string(indices[u]));
    }

    // Pair identities (b) and (c); u plays the distinguished first
    // index, v ranges over the others.
    for (std::size_t u = 0; u < m; ++u) {
        auto del_u = erase_index(indices, u);
        const Int b_hat_u = beta(del_u);
        for (std::size_t v = 0; v < m; ++v) {
            if (v == u) continue;
            auto del_uv = erase_pair(indices, u, v);
            const Int a_uv = alpha(del_uv);
            const Int g_uv = gamma(del_uv);
            auto del_v = erase_index(indices, v);
            std::string ops = join(indices) + " u=" + std::to_string(indices[u]) +
                              " v=" + std::to_string(indices[v]);

            Int lhs_b = Int(indices[v]) * (g_uv + 2 * a_uv) - b_hat_u - 2 * g_uv;
            expect(rep, lhs_b == 2 * a_uv, "identity (b)", ops);

            Int lhs_c = (g_uv + 2 * a_uv) * b_full + 2 * Int(indices[u]) * a_uv * a_uv;
            Int rhs_c = (2 * beta(del_v) - gamma(del_v)) * b_hat_u;
            expect(rep, lhs_c == rhs_c, "identity (c)", ops);
        }
    }

    return rep;
}

}  // namespace distblock::forms
