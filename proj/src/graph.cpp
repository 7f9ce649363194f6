#include "distblock/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "distblock/closed_forms.hpp"
#include "distblock/errors.hpp"

namespace distblock::graphs {

MultipartiteSpec BlockPlacement::spec() const {
    std::vector<long> sizes;
    sizes.reserve(parts.size());
    for (const auto& p : parts) sizes.push_back(static_cast<long>(p.size()));
    return MultipartiteSpec(std::move(sizes));
}

std::vector<VertexId> BlockPlacement::vertices() const {
    std::vector<VertexId> vs;
    for (const auto& p : parts) vs.insert(vs.end(), p.begin(), p.end());
    return vs;
}

bool BlockPlacement::contains(VertexId v) const { return part_of(v).has_value(); }

std::optional<std::size_t> BlockPlacement::part_of(VertexId v) const {
    for (std::size_t p = 0; p < parts.size(); ++p)
        if (std::find(parts[p].begin(), parts[p].end(), v) != parts[p].end()) return p;
    return std::nullopt;
}

std::vector<std::size_t> MultiBlockGraph::blocks_of(VertexId v) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < blocks.size(); ++t)
        if (blocks[t].contains(v)) out.push_back(t);
    return out;
}

ValidationReport validate(const MultiBlockGraph& g) {
    ValidationReport rep;
    auto complain = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

    if (g.vertex_count <= 0) complain("vertex_count must be positive");
    if (g.blocks.empty()) complain("graph has no blocks");

    std::vector<int> multiplicity(std::max(g.vertex_count, 0), 0);
    for (std::size_t t = 0; t < g.blocks.size(); ++t) {
        const auto& blk = g.blocks[t];
        if (blk.parts.size() < 2)
            complain("block " + std::to_string(t) + " has fewer than 2 parts");
        std::set<VertexId> seen;
        for (const auto& part : blk.parts) {
            if (part.empty())
                complain("block " + std::to_string(t) + " has an empty part");
            for (VertexId v : part) {
                if (v < 0 || v >= g.vertex_count) {
                    complain("block " + std::to_string(t) + " references vertex " +
                             std::to_string(v) + " out of range");
                    continue;
                }
                if (!seen.insert(v).second)
                    complain("block " + std::to_string(t) + " repeats vertex " +
                             std::to_string(v));
                else
                    ++multiplicity[v];
            }
        }
    }
    if (!rep.violations.empty()) return rep;

    for (VertexId v = 0; v < g.vertex_count; ++v) {
        if (multiplicity[v] == 0)
            complain("vertex " + std::to_string(v) + " lies in no block");
        else if (multiplicity[v] >= 2)
            rep.cut_vertices.push_back(v);
    }

    for (std::size_t s = 0; s < g.blocks.size(); ++s)
        for (std::size_t t = s + 1; t < g.blocks.size(); ++t) {
            auto vs = g.blocks[s].vertices();
            int shared = 0;
            for (VertexId v : vs)
                if (g.blocks[t].contains(v)) ++shared;
            if (shared > 1)
                complain("blocks " + std::to_string(s) + " and " + std::to_string(t) +
                         " share " + std::to_string(shared) + " vertices");
        }

    // Block-cut incidence: tree on (blocks + shared vertices). A connected
    // structure with edges == nodes - 1 is a tree; anything else means a
    // cycle among blocks or a disconnected graph.
    for (std::size_t t = 0; t < g.blocks.size(); ++t)
        for (VertexId v : rep.cut_vertices)
            if (g.blocks[t].contains(v)) rep.block_tree.emplace_back(t, v);

    const std::size_t nodes = g.blocks.size() + rep.cut_vertices.size();
    const std::size_t edges = rep.block_tree.size();

    // connectivity over the incidence structure
    std::map<VertexId, std::size_t> cut_node;
    for (std::size_t i = 0; i < rep.cut_vertices.size(); ++i)
        cut_node[rep.cut_vertices[i]] = g.blocks.size() + i;
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (const auto& [blk, v] : rep.block_tree) {
        adj[blk].push_back(cut_node[v]);
        adj[cut_node[v]].push_back(blk);
    }
    std::vector<char> seen(nodes, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != nodes) complain("block structure is disconnected");
    if (edges + 1 != nodes && reached == nodes)
        complain("blocks form a cycle (block-cut incidence is not a tree)");

    return rep;
}

void require_valid(const MultiBlockGraph& g) {
    auto rep = validate(g);
    if (!rep.ok()) {
        std::string msg = "invalid multi-block graph:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw InvalidSpecError(msg);
    }
}

namespace {

std::vector<std::vector<VertexId>> adjacency(const MultiBlockGraph& g) {
    std::vector<std::set<VertexId>> nbr(g.vertex_count);
    for (const auto& blk : g.blocks)
        for (std::size_t p = 0; p < blk.parts.size(); ++p)
            for (std::size_t q = p + 1; q < blk.parts.size(); ++q)
                for (VertexId u : blk.parts[p])
                    for (VertexId v : blk.parts[q]) {
                        nbr[u].insert(v);
                        nbr[v].insert(u);
                    }
    std::vector<std::vector<VertexId>> adj(g.vertex_count);
    for (VertexId v = 0; v < g.vertex_count; ++v)
        adj[v].assign(nbr[v].begin(), nbr[v].end());
    return adj;
}

}  // namespace

ExactMatrix bfs_distances(const MultiBlockGraph& g) {
    require_valid(g);
    const auto adj = adjacency(g);
    const auto n = static_cast<std::size_t>(g.vertex_count);
    ExactMatrix d(n, n);
    std::vector<int> dist(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<VertexId> q;
        q.push(static_cast<VertexId>(s));
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (dist[t] < 0) throw InvalidSpecError("graph is disconnected");
            d(s, t) = dist[t];
        }
    }
    return d;
}

namespace {

// Distance inside one complete multipartite block.
long block_distance(const BlockPlacement& blk, VertexId u, VertexId v) {
    if (u == v) return 0;
    auto pu = blk.part_of(u), pv = blk.part_of(v);
    return *pu == *pv ? 2 : 1;
}

}  // namespace

ExactMatrix block_path_distances(const MultiBlockGraph& g) {
    require_valid(g);
    const auto n = static_cast<std::size_t>(g.vertex_count);
    const std::size_t nb = g.blocks.size();

    // Nodes of the block-cut tree: blocks 0..nb-1, then cut vertices.
    std::vector<std::size_t> cut_index(n, SIZE_MAX);
    std::vector<VertexId> cuts;
    for (VertexId v = 0; v < g.vertex_count; ++v)
        if (g.blocks_of(v).size() >= 2) {
            cut_index[v] = nb + cuts.size();
            cuts.push_back(v);
        }
    const std::size_t nodes = nb + cuts.size();
    std::vector<std::vector<std::size_t>> tree(nodes);
    for (std::size_t t = 0; t < nb; ++t)
        for (VertexId v : g.blocks[t].vertices())
            if (cut_index[v] != SIZE_MAX) {
                tree[t].push_back(cut_index[v]);
                tree[cut_index[v]].push_back(t);
            }

    auto tree_path = [&](std::size_t from, std::size_t to) {
        std::vector<std::size_t> parent(nodes, SIZE_MAX), path;
        std::queue<std::size_t> q;
        q.push(from);
        parent[from] = from;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            if (u == to) break;
            for (auto w : tree[u])
                if (parent[w] == SIZE_MAX) {
                    parent[w] = u;
                    q.push(w);
                }
        }
        for (std::size_t u = to; u != from; u = parent[u]) path.push_back(u);
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
    };

    ExactMatrix d(n, n);
    for (VertexId u = 0; u < g.vertex_count; ++u) {
        std::size_t bu = g.blocks_of(u).front();
        for (VertexId v = u + 1; v < g.vertex_count; ++v) {
            std::size_t bv = g.blocks_of(v).front();
            long dist = 0;
            if (bu == bv) {
                dist = block_distance(g.blocks[bu], u, v);
            } else {
                auto path = tree_path(bu, bv);
                VertexId cur = u;
                for (std::size_t step = 1; step < path.size(); ++step) {
                    if (path[step] < nb) continue;  // block node
                    VertexId cut = cuts[path[step] - nb];
                    std::size_t blk = path[step - 1];
                    dist += block_distance(g.blocks[blk], cur, cut);
                    cur = cut;
                }
                dist += block_distance(g.blocks[path.back()], cur, v);
            }
            d(u, v) = dist;
            d(v, u) = dist;
        }
    }
    return d;
}

std::pair<Int, Int> graham_compose(const MultiBlockGraph& g) {
    require_valid(g);
    std::vector<Int> dets, cofs;
    for (const auto& blk : g.blocks) {
        auto spec = blk.spec();
        dets.push_back(forms::det_closed(spec));
        cofs.push_back(forms::cof_closed(spec));
    }
    Int cof = 1;
    for (const auto& c : cofs) cof *= c;
    Int det = 0;
    for (std::size_t i = 0; i < dets.size(); ++i) {
        Int term = dets[i];
        for (std::size_t j = 0; j < cofs.size(); ++j)
            if (j != i) term *= cofs[j];
        det += term;
    }
    return {det, cof};
}

ExactMatrix graph_laplacian(const MultiBlockGraph& g) {
    require_valid(g);
    const auto adj = adjacency(g);
    const auto n = static_cast<std::size_t>(g.vertex_count);
    ExactMatrix l(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        l(u, u) = Int(static_cast<long>(adj[u].size()));
        for (VertexId v : adj[u]) l(u, v) = -1;
    }
    return l;
}

// ---- generators -----------------------------------------------------------

MultiBlockGraph single_block(const MultipartiteSpec& spec) {
    MultiBlockGraph g;
    g.vertex_count = static_cast<VertexId>(spec.vertex_count());
    BlockPlacement blk;
    VertexId next = 0;
    for (long sz : spec.parts) {
        std::vector<VertexId> part;
        for (long i = 0; i < sz; ++i) part.push_back(next++);
        blk.parts.push_back(std::move(part));
    }
    g.blocks.push_back(std::move(blk));
    return g;
}

MultiBlockGraph tree_graph(const std::vector<std::pair<VertexId, VertexId>>& edges) {
    MultiBlockGraph g;
    VertexId max_id = 0;
    for (auto [u, v] : edges) max_id = std::max({max_id, u, v});
    g.vertex_count = max_id + 1;
    for (auto [u, v] : edges) {
        if (u == v) throw InvalidSpecError("tree edge with equal endpoints");
        g.blocks.push_back(BlockPlacement{{{u}, {v}}});
    }
    require_valid(g);
    return g;
}

MultiBlockGraph star_graph(const std::vector<MultipartiteSpec>& specs,
                           const std::vector<std::size_t>& hub_parts) {
    if (specs.empty()) throw InvalidSpecError("star_graph needs at least one block");
    if (!hub_parts.empty() && hub_parts.size() != specs.size())
        throw InvalidSpecError("hub_parts size mismatch");
    MultiBlockGraph g;
    VertexId next = 1;  // vertex 0 is the hub
    for (std::size_t t = 0; t < specs.size(); ++t) {
        const auto& spec = specs[t];
        std::size_t hub_part = hub_parts.empty() ? 0 : hub_parts[t];
        if (hub_part >= spec.part_count())
            throw InvalidSpecError("hub part index out of range");
        BlockPlacement blk;
        for (std::size_t p = 0; p < spec.part_count(); ++p) {
            std::vector<VertexId> part;
            long sz = spec.parts[p];
            if (p == hub_part) {
                part.push_back(0);
                --sz;
            }
            for (long i = 0; i < sz; ++i) part.push_back(next++);
            blk.parts.push_back(std::move(part));
        }
        g.blocks.push_back(std::move(blk));
    }
    g.vertex_count = next;
    require_valid(g);
    return g;
}

MultiBlockGraph star_of_blocks(const MultipartiteSpec& spec, int b) {
    if (b < 1) throw InvalidSpecError("star_of_blocks needs b >= 1");
    return star_graph(std::vector<MultipartiteSpec>(b, spec));
}

MultiBlockGraph random_tree(std::mt19937_64& rng, int n) {
    if (n < 2) throw InvalidSpecError("random_tree needs n >= 2");
    if (n == 2) return tree_graph({{0, 1}});
    // Pruefer decoding
    std::vector<int> seq(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (auto& s : seq) s = pick(rng);
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return tree_graph(edges);
}

namespace {

MultipartiteSpec random_spec(std::mt19937_64& rng, long max_vertices,
                             bool gamma_nonzero) {
    std::uniform_int_distribution<int> m_pick(2, 4);
    for (;;) {
        int m = m_pick(rng);
        if (m > max_vertices) m = 2;
        std::vector<long> parts;
        long left = std::max<long>(max_vertices - m, 0);
        for (int i = 0; i < m; ++i) {
            std::uniform_int_distribution<long> extra(0, std::min<long>(left, 3));
            long e = extra(rng);
            parts.push_back(1 + e);
            left -= e;
        }
        MultipartiteSpec spec(parts);
        if (!gamma_nonzero || forms::gamma(spec.parts) != 0) return spec;
    }
}

}  // namespace

MultiBlockGraph random_multiblock(std::mt19937_64& rng, int max_vertices,
                                  bool gamma_nonzero) {
    if (max_vertices < 2) throw InvalidSpecError("need room for at least one K_2");
    MultiBlockGraph g;
    auto first = random_spec(rng, std::min<long>(max_vertices, 8), gamma_nonzero);
    g = single_block(first);
    while (g.vertex_count < max_vertices) {
        long room = max_vertices - g.vertex_count;
        if (room < 1) break;
        // a new block reuses one existing vertex and adds (|V_spec| - 1) fresh ones
        auto spec = random_spec(rng, std::min<long>(room + 1, 8), gamma_nonzero);
        std::uniform_int_distribution<VertexId> at(0, g.vertex_count - 1);
        VertexId hub = at(rng);
        std::uniform_int_distribution<std::size_t> part_at(0, spec.part_count() - 1);
        std::size_t hub_part = part_at(rng);

        BlockPlacement blk;
        VertexId next = g.vertex_count;
        for (std::size_t p = 0; p < spec.part_count(); ++p) {
            std::vector<VertexId> part;
            long sz = spec.parts[p];
            if (p == hub_part) {
                part.push_back(hub);
                --sz;
            }
            for (long i = 0; i < sz; ++i) part.push_back(next++);
            blk.parts.push_back(std::move(part));
        }
        g.vertex_count = next;
        g.blocks.push_back(std::move(blk));
        std::uniform_int_distribution<int> stop(0, 3);
        if (stop(rng) == 0) break;
    }
    require_valid(g);
    return g;
}

std::vector<std::string> distance_matrix_violations(const ExactMatrix& d) {
    std::vector<std::string> out;
    if (!d.is_square()) {
        out.push_back("not square");
        return out;
    }
    const std::size_t n = d.rows();
    if (!d.is_symmetric()) out.push_back("not symmetric");
    for (std::size_t i = 0; i < n; ++i)
        if (!d(i, i).is_zero()) out.push_back("nonzero diagonal at " + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d(i, j).sign() <= 0)
                out.push_back("nonpositive off-diagonal at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    for (std::size_t i = 0; i < n && out.empty(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (d(i, j) > d(i, k) + d(k, j)) {
                    out.push_back("triangle inequality fails at (" + std::to_string(i) +
                                  "," + std::to_string(j) + "," + std::to_string(k) + ")");
                    break;
                }
    return out;
}

}  // namespace distblock::graphs
