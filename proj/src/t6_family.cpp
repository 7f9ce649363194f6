#include "distblock/t6_family.hpp"

#include "distblock/errors.hpp"
#include "distblock/exact_linalg.hpp"

namespace distblock::t6family {

namespace {

using linalg::block_assemble;
using Grid = std::vector<std::vector<ExactMatrix>>;

ExactMatrix J(std::size_t r, std::size_t c, long scale = 1) {
    return ExactMatrix::constant(r, c, Rational(scale));
}

// [[A, B], [C, D]] with zero-dimension blocks allowed (the n = 3 case).
ExactMatrix quad(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                 const ExactMatrix& d) {
    return block_assemble({{a, b}, {c, d}});
}

ExactMatrix stack2(const ExactMatrix& top, const ExactMatrix& bottom) {
    return block_assemble({{top}, {bottom}});
}

// The recurring per-block matrices of the distance/Laplacian/R/C block forms.
struct Pieces {
    std::size_t t;  // n - 3, the non-central large-part size of a T_n block
    long n, b;

    ExactMatrix d1, d2, d3, d4, d5, d6;
    ExactMatrix l1, l2, lv1, lv2;
    ExactMatrix r1, r2, r3, r4, rv1, rv2;
    Rational r3_scalar;
    ExactMatrix c1, c2, c3, c4, c6;
    Rational c7;
};

Pieces make_pieces(const T6TnSpec& spec) {
    Pieces p;
    const long n = spec.n, b = spec.b;
    const auto t = static_cast<std::size_t>(n - 3);
    p.t = t;
    p.n = n;
    p.b = b;

    p.d1 = quad(ExactMatrix::aI_bJ(2, -1, 1), J(2, 3), J(3, 2),
                ExactMatrix::aI_bJ(3, -2, 2));
    p.d2 = quad(J(2, 2, 2), J(2, t, 3), J(3, 2, 3), J(3, t, 4));
    p.d3 = stack2(J(2, 1, 1), J(3, 1, 2));
    p.d4 = quad(ExactMatrix::aI_bJ(2, -1, 1), J(2, t), J(t, 2),
                ExactMatrix::aI_bJ(t, -2, 2));
    p.d5 = quad(J(2, 2, 2), J(2, t, 3), J(t, 2, 3), J(t, t, 4));
    p.d6 = stack2(J(2, 1, 1), J(t, 1, 2));

    p.l1 = quad(ExactMatrix::aI_bJ(2, 6, -1), J(2, 3, -1), J(3, 2, -1),
                ExactMatrix::aI_bJ(3, 2, 0));
    p.l2 = quad(ExactMatrix::aI_bJ(2, n, -1), J(2, t, -1), J(t, 2, -1),
                ExactMatrix::aI_bJ(t, 2, 0));
    p.lv1 = stack2(J(2, 1, -1), J(3, 1, 0));
    p.lv2 = stack2(J(2, 1, -1), J(t, 1, 0));

    const Int n6 = n - 6;
    const Int bb1 = Int(b) * (b + 1);
    p.r1 = quad(
        ExactMatrix::aI_bJ(2, Rational(4 * n6 * (b + 1)),
                           Rational(4 * bb1 - (3 * b + 4) * n6)),
        ExactMatrix::constant(2, 3, Rational(-(2 * bb1 + n6))),
        ExactMatrix::constant(3, 2, Rational(-(2 * bb1 + n6))),
        ExactMatrix::aI_bJ(3, Rational((b + 1) * n6), Rational(bb1 - n6)));
    // lower-left coefficient (b+1)(n-4)-(n-6) is positive: forced by the
    // inverse's own block form, which the ten product identities certify
    p.r2 = quad(
        ExactMatrix::constant(2, 2, Rational(-(2 * (b + 1) * (n - 4) + n6))),
        ExactMatrix::constant(2, t, Rational(2 * (b + 1) - n6)),
        ExactMatrix::constant(3, 2, Rational((b + 1) * (n - 4) - n6)),
        ExactMatrix::constant(3, t, Rational(-((b + 1) + n6))));
    p.r3 = quad(
        ExactMatrix::aI_bJ(2, Rational((b + 1) * (n - 2) * n6),
                           Rational((b + 1) * (n - 2) - n6)),
        ExactMatrix::constant(2, t, Rational(-((b + 1) * (n - 4) + n6))),
        ExactMatrix::constant(t, 2, Rational(-((b + 1) * (n - 4) + n6))),
        ExactMatrix::aI_bJ(t, Rational((b + 1) * n6), Rational((b + 1) - n6)));
    p.r4 = ExactMatrix::constant(static_cast<std::size_t>(n - 1),
                                 static_cast<std::size_t>(n - 1), Rational(-n6));
    p.rv1 = stack2(ExactMatrix::constant(2, 1, Rational(n6 * (2 * bb1 - 1))),
                   ExactMatrix::constant(3, 1, Rational(-n6 * (bb1 + 1))));
    p.rv2 = ExactMatrix::constant(static_cast<std::size_t>(n - 1), 1, Rational(-n6));
    p.r3_scalar = Rational(-Int(b) * b * n6);

    p.c1 = quad(
        ExactMatrix::aI_bJ(2, Rational(-2 * n6), Rational(2 * (2 * b - n6))),
        ExactMatrix::constant(2, 3, Rational(-(2 * b - n6))),
        ExactMatrix::constant(3, 2, Rational(-(2 * b - n6))),
        ExactMatrix::aI_bJ(3, Rational(-n6), Rational(b)));
    p.c2 = quad(ExactMatrix::constant(2, 2, Rational(-2 * (n - 4))),
                J(2, t, 2), J(3, 2, n - 4), J(3, t, -1));
    p.c3 = stack2(ExactMatrix::constant(2, 1, Rational(n6 * (2 * b + 1))),
                  ExactMatrix::constant(3, 1, Rational(-n6 * b)));
    p.c4 = quad(
        ExactMatrix::aI_bJ(2, Rational(-2 * n6), Rational(2 * (n - 4))),
        J(2, t, -2), J(t, 2, -2), ExactMatrix::aI_bJ(t, Rational(-n6), 1));
    p.c6 = stack2(ExactMatrix::constant(2, 1, Rational(n6)), J(t, 1, 0));
    p.c7 = Rational(-n6 * (3 * b + 1));
    return p;
}

// Assemble the (b+2)x(b+2) block layout shared by D, L, R, and C: a T_6
// corner, b interchangeable T_n strips, and the center row/column.
ExactMatrix assemble(const Pieces& p, const ExactMatrix& corner,
                     const ExactMatrix& strip, const ExactMatrix& diag,
                     const ExactMatrix& off, const ExactMatrix& corner_v,
                     const ExactMatrix& strip_v, const Rational& center) {
    const auto nb = static_cast<std::size_t>(p.b);
    Grid grid(nb + 2, std::vector<ExactMatrix>(nb + 2));
    grid[0][0] = corner;
    for (std::size_t j = 1; j <= nb; ++j) grid[0][j] = strip;
    grid[0][nb + 1] = corner_v;
    ExactMatrix strip_t = strip.transpose();
    ExactMatrix corner_vt = corner_v.transpose();
    ExactMatrix strip_vt = strip_v.transpose();
    for (std::size_t i = 1; i <= nb; ++i) {
        grid[i][0] = strip_t;
        for (std::size_t j = 1; j <= nb; ++j) grid[i][j] = i == j ? diag : off;
        grid[i][nb + 1] = strip_v;
    }
    grid[nb + 1][0] = corner_vt;
    for (std::size_t j = 1; j <= nb; ++j) grid[nb + 1][j] = strip_vt;
    grid[nb + 1][nb + 1] = ExactMatrix::constant(1, 1, center);
    return block_assemble(grid);
}

}  // namespace

T6TnSpec::T6TnSpec(long n_, long b_) : n(n_), b(b_) {
    if (n < 3) throw InvalidSpecError("T_n blocks need n >= 3");
    if (n == 6)
        throw InvalidSpecError("n = 6 is excluded from the family (n - 6 divides "
                               "the inverse formula)");
    if (b < 1) throw InvalidSpecError("the family needs b >= 1 T_n blocks");
}

T6TnMatrices build_t6_tn(const T6TnSpec& spec) {
    const Pieces p = make_pieces(spec);
    T6TnMatrices m;
    const ExactMatrix zero_strip =
        ExactMatrix::zero(5, static_cast<std::size_t>(spec.n - 1));
    const ExactMatrix zero_off = ExactMatrix::zero(
        static_cast<std::size_t>(spec.n - 1), static_cast<std::size_t>(spec.n - 1));
    m.d = assemble(p, p.d1, p.d2, p.d4, p.d5, p.d3, p.d6, Rational(0));
    m.l = assemble(p, p.l1, zero_strip, p.l2, zero_off, p.lv1, p.lv2,
                   Rational(2 * (spec.b + 1)));
    return m;
}

graphs::MultiBlockGraph as_graph(const T6TnSpec& spec) {
    graphs::MultiBlockGraph g;
    g.vertex_count = static_cast<graphs::VertexId>(spec.vertex_count());
    const auto center = static_cast<graphs::VertexId>(spec.vertex_count() - 1);

    graphs::BlockPlacement t6;
    t6.parts = {{0}, {1}, {2, 3, 4, center}};
    g.blocks.push_back(std::move(t6));

    graphs::VertexId next = 5;
    for (long j = 0; j < spec.b; ++j) {
        graphs::BlockPlacement blk;
        blk.parts.push_back({next});
        blk.parts.push_back({next + 1});
        std::vector<graphs::VertexId> large;
        for (long i = 0; i < spec.n - 3; ++i) large.push_back(next + 2 + i);
        large.push_back(center);
        blk.parts.push_back(std::move(large));
        next += static_cast<graphs::VertexId>(spec.n - 1);
        g.blocks.push_back(std::move(blk));
    }
    graphs::require_valid(g);
    return g;
}

Int det_t6_tn(const T6TnSpec& spec) {
    Int det = (spec.n * spec.b + 1) % 2 == 0 ? 1 : -1;
    for (long i = 0; i < (spec.n - 3) * spec.b + 4; ++i) det *= 2;
    for (long i = 0; i < spec.b; ++i) det *= Int(spec.n - 6);
    return det;
}

ExactMatrix build_R(const T6TnSpec& spec) {
    const Pieces p = make_pieces(spec);
    return assemble(p, p.r1, p.r2, p.r3, p.r4, p.rv1, p.rv2, p.r3_scalar);
}

ExactMatrix inverse_t6_tn(const T6TnSpec& spec) {
    const Pieces p = make_pieces(spec);
    const auto size = static_cast<std::size_t>(spec.vertex_count());

    T6TnMatrices m = build_t6_tn(spec);
    ExactMatrix combo = Rational(-1, 2) * m.l;
    combo += Rational(1, 2 * (spec.b + 1)) * ExactMatrix::ones(size, size);
    combo += Rational(Int(1), Int(2) * (spec.b + 1) * (spec.n - 6)) * build_R(spec);

    // Independent assembly from the inverse's own printed blocks; a mismatch
    // would mean a transcription error in one of the two forms.
    const ExactMatrix zero_off = ExactMatrix::zero(
        static_cast<std::size_t>(spec.n - 1), static_cast<std::size_t>(spec.n - 1));
    ExactMatrix blocks =
        assemble(p, p.c1, p.c2, p.c4, zero_off, p.c3, p.c6, p.c7);
    blocks *= Rational(Int(1), Int(2) * (spec.n - 6));
    if (combo != blocks)
        throw Error("inverse_t6_tn: the two block constructions disagree");
    return combo;
}

std::optional<Detection> detect(const graphs::MultiBlockGraph& g) {
    auto rep = graphs::validate(g);
    if (!rep.ok() || g.blocks.size() < 2) return std::nullopt;

    // single shared vertex, present in every block
    graphs::VertexId hub = -1;
    for (graphs::VertexId v = 0; v < g.vertex_count; ++v)
        if (g.blocks_of(v).size() == g.blocks.size()) {
            hub = v;
            break;
        }
    if (hub < 0) return std::nullopt;

    // each block must be K_{1,1,s} with the hub in the size-s part
    std::size_t t6_block = SIZE_MAX;
    long tail_size = -1;
    for (std::size_t t = 0; t < g.blocks.size(); ++t) {
        const auto& blk = g.blocks[t];
        if (blk.parts.size() != 3) return std::nullopt;
        auto sizes = blk.spec().sorted().parts;
        if (sizes[0] != 1 || sizes[1] != 1) return std::nullopt;
        long s = sizes[2];
        auto hub_part = blk.part_of(hub);
        if (!hub_part || static_cast<long>(blk.parts[*hub_part].size()) != s)
            return std::nullopt;  // hub sits at a base vertex
        if (s == 4 && t6_block == SIZE_MAX) {
            t6_block = t;
        } else {
            if (tail_size == -1) tail_size = s;
            if (s != tail_size) return std::nullopt;
        }
    }
    if (t6_block == SIZE_MAX || tail_size < 0 || tail_size == 4) return std::nullopt;

    Detection found{T6TnSpec(tail_size + 2, static_cast<long>(g.blocks.size()) - 1), {}};

    auto append_block = [&found, hub](const graphs::BlockPlacement& blk) {
        std::size_t large = *blk.part_of(hub);
        for (std::size_t p = 0; p < blk.parts.size(); ++p)
            if (p != large) found.order.push_back(blk.parts[p].front());
        for (graphs::VertexId v : blk.parts[large])
            if (v != hub) found.order.push_back(v);
    };
    append_block(g.blocks[t6_block]);
    for (std::size_t t = 0; t < g.blocks.size(); ++t)
        if (t != t6_block) append_block(g.blocks[t]);
    found.order.push_back(hub);
    return found;
}

ExactMatrix inverse_in_graph_order(const Detection& found) {
    ExactMatrix c = inverse_t6_tn(found.spec);
    const std::size_t n = c.rows();
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(static_cast<std::size_t>(found.order[i]),
                static_cast<std::size_t>(found.order[j])) = c(i, j);
    return out;
}

StepReport verify_steps(const T6TnSpec& spec) {
    const Pieces p = make_pieces(spec);
    StepReport rep;
    const Rational scale(Int(2) * (spec.n - 6));
    const long b = spec.b;

    auto record = [&rep](int step, bool ok, const std::string& what) {
        rep.pass[step - 1] = ok;
        if (!ok) rep.failures.push_back("step " + std::to_string(step) + ": " + what);
    };
    auto is_scaled_identity = [&scale](const ExactMatrix& m) {
        return m == scale * ExactMatrix::identity(m.rows());
    };

    ExactMatrix c2t = p.c2.transpose(), d2t = p.d2.transpose();
    ExactMatrix d3t = p.d3.transpose(), d6t = p.d6.transpose();

    record(1, is_scaled_identity(p.d1 * p.c1 + Rational(b) * (p.d2 * c2t) +
                                 p.d3 * p.c3.transpose()),
           "D1*C1 + b*D2*C2' + d3*c3' != 2(n-6) I");
    record(2, (p.d1 * p.c2 + p.d2 * p.c4 + p.d3 * p.c6.transpose()).is_zero(),
           "D1*C2 + D2*C4 + d3*c6' != 0");
    record(3, (p.d1 * p.c3 + Rational(b) * (p.d2 * p.c6) + p.c7 * p.d3).is_zero(),
           "D1*c3 + b*D2*c6 + c7*d3 != 0");
    record(4, (d2t * p.c1 + p.d4 * c2t + Rational(b - 1) * (p.d5 * c2t) +
               p.d6 * p.c3.transpose()).is_zero(),
           "D2'*C1 + D4*C2' + (b-1)*D5*C2' + d6*c3' != 0");
    record(5, is_scaled_identity(d2t * p.c2 + p.d4 * p.c4 + p.d6 * p.c6.transpose()),
           "D2'*C2 + D4*C4 + d6*c6' != 2(n-6) I");
    record(6, (d2t * p.c2 + p.d5 * p.c4 + p.d6 * p.c6.transpose()).is_zero(),
           "D2'*C2 + D5*C4 + d6*c6' != 0");
    record(7, (d2t * p.c3 + p.d4 * p.c6 + Rational(b - 1) * (p.d5 * p.c6) +
               p.c7 * p.d6).is_zero(),
           "D2'*c3 + D4*c6 + (b-1)*D5*c6 + c7*d6 != 0");
    record(8, (d3t * p.c1 + Rational(b) * (d6t * c2t)).is_zero(),
           "d3'*C1 + b*d6'*C2' != 0");
    record(9, (d3t * p.c2 + d6t * p.c4).is_zero(), "d3'*C2 + d6'*C4 != 0");
    record(10, is_scaled_identity(d3t * p.c3 + Rational(b) * (d6t * p.c6)),
           "d3'*c3 + b*d6'*c6 != 2(n-6)");
    return rep;
}

}  // namespace distblock::t6family
