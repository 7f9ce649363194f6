#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "distblock/graph.hpp"
#include "distblock/matrix.hpp"

namespace distblock::t6family {

/// One T_6 block plus b blocks of T_n glued at a single central cut vertex
/// lying in the large part of every block (never at a base vertex; that
/// variant is rejected by construction). n = 6 is excluded: the inverse
/// formula divides by n - 6 and the family is defined without it.
struct T6TnSpec {
    long n;
    long b;

    T6TnSpec(long n_, long b_);
    long vertex_count() const { return 6 + b * (n - 1); }
};

/// Distance matrix and Laplacian in the pinned vertex order: T_6's two base
/// vertices, its three non-central large-part vertices, then per T_n block
/// two base vertices followed by n-3 non-central large-part vertices, and
/// the center last.
struct T6TnMatrices {
    ExactMatrix d;
    ExactMatrix l;
};

T6TnMatrices build_t6_tn(const T6TnSpec& spec);

/// Same graph as a MultiBlockGraph, with global ids equal to the pinned
/// vertex order above (the center is the last id).
graphs::MultiBlockGraph as_graph(const T6TnSpec& spec);

/// det D = (-1)^{nb+1} 2^{(n-3)b+4} (n-6)^b.
Int det_t6_tn(const T6TnSpec& spec);

/// The correction matrix R entering the inverse.
ExactMatrix build_R(const T6TnSpec& spec);

/// D^{-1} = -L/2 + J/(2(b+1)) + R/(2(b+1)(n-6)). Assembled both from that
/// linear combination and from the inverse's own printed block form; the two
/// constructions must agree exactly.
ExactMatrix inverse_t6_tn(const T6TnSpec& spec);

/// Block-by-block evaluation of the ten product identities behind D*C = I,
/// one entry per step.
struct StepReport {
    std::array<bool, 10> pass{};
    std::vector<std::string> failures;
    bool all() const { return failures.empty(); }
};

StepReport verify_steps(const T6TnSpec& spec);

/// A recognized family instance inside an arbitrary MultiBlockGraph:
/// order[i] is the global vertex id sitting at position i of the pinned
/// layout.
struct Detection {
    T6TnSpec spec;
    std::vector<graphs::VertexId> order;
};

/// Recognizes one T_6 block plus b equal T_n blocks glued at a single
/// common vertex lying in the large part of every block. Graphs where the
/// shared vertex is a base vertex are not the family and yield nullopt.
std::optional<Detection> detect(const graphs::MultiBlockGraph& g);

/// The inverse permuted into the graph's own vertex numbering.
ExactMatrix inverse_in_graph_order(const Detection& found);

}  // namespace distblock::t6family
