#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "distblock/multipartite.hpp"

namespace distblock::graphs {

using VertexId = int;

/// One complete multipartite block placed on global vertex ids: parts[p] is
/// the list of global ids forming part p.
struct BlockPlacement {
    std::vector<std::vector<VertexId>> parts;

    MultipartiteSpec spec() const;
    std::vector<VertexId> vertices() const;
    bool contains(VertexId v) const;
    /// Part index of v inside this block, if present.
    std::optional<std::size_t> part_of(VertexId v) const;
};

/// Blocks glued at cut vertices. Valid instances satisfy: any two blocks
/// share at most one vertex, the block-vertex incidence forms a tree, and
/// every vertex of 0..vertex_count-1 lies in at least one block.
struct MultiBlockGraph {
    VertexId vertex_count = 0;
    std::vector<BlockPlacement> blocks;

    /// Indices of the blocks containing v (k in the cut-vertex correction).
    std::vector<std::size_t> blocks_of(VertexId v) const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<VertexId> cut_vertices;  // vertices lying in >= 2 blocks
    /// Block-cut tree edges as (block index, cut vertex).
    std::vector<std::pair<std::size_t, VertexId>> block_tree;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const MultiBlockGraph& g);
/// validate() + throw InvalidSpecError on any violation.
void require_valid(const MultiBlockGraph& g);

/// All-pairs shortest paths by BFS over the union of block edges. The
/// independent distance oracle.
ExactMatrix bfs_distances(const MultiBlockGraph& g);

/// Distances via the block-cut tree: walk the unique block path from u to v
/// and add the within-block distances between consecutive cut vertices.
/// Must agree with bfs_distances on every valid graph.
ExactMatrix block_path_distances(const MultiBlockGraph& g);

/// (det D(G), cof D(G)) composed from per-block closed forms:
///   cof D(G) = prod_i cof D(G_i)
///   det D(G) = sum_i det D(G_i) prod_{j != i} cof D(G_j)
std::pair<Int, Int> graham_compose(const MultiBlockGraph& g);

/// Degree-diagonal minus adjacency, from the union of block edges.
ExactMatrix graph_laplacian(const MultiBlockGraph& g);

// ---- generators ----------------------------------------------------------

/// The one-block graph of a composition; vertex ids follow part order.
MultiBlockGraph single_block(const MultipartiteSpec& spec);

/// Tree given by an explicit edge list; every edge becomes a K_2 block.
MultiBlockGraph tree_graph(const std::vector<std::pair<VertexId, VertexId>>& edges);

/// b copies of one composition sharing a single hub vertex, which sits in
/// the first part of every copy.
MultiBlockGraph star_of_blocks(const MultipartiteSpec& spec, int b);

/// Heterogeneous star: one block per composition, all sharing a hub vertex
/// placed in the chosen part of each block (default: first part).
MultiBlockGraph star_graph(const std::vector<MultipartiteSpec>& specs,
                           const std::vector<std::size_t>& hub_parts = {});

/// Random labeled tree on n vertices (Pruefer sequence).
MultiBlockGraph random_tree(std::mt19937_64& rng, int n);

/// Random multi-block graph of at most max_vertices vertices; new blocks are
/// attached at uniformly chosen existing vertices. With gamma_nonzero set,
/// every block composition has cof != 0 (so the spectral machinery applies).
MultiBlockGraph random_multiblock(std::mt19937_64& rng, int max_vertices,
                                  bool gamma_nonzero);

/// Violations of the distance-matrix shape: symmetry, zero diagonal,
/// positive off-diagonal entries, triangle inequality. Empty when clean.
std::vector<std::string> distance_matrix_violations(const ExactMatrix& d);

}  // namespace distblock::graphs
