#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "distblock/exact_linalg.hpp"
#include "distblock/multipartite.hpp"

namespace distblock::sweep {

using linalg::Exec;

struct Failure {
    std::string item;
    std::string detail;
};

struct Report {
    std::size_t checked = 0;
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

/// Runs one check per item, optionally fanning out across OpenMP tasks.
/// Items are independent and checks pure, so the parallel run produces the
/// same report as the serial reference; failures come back in input order.
Report run(std::size_t count,
           const std::function<std::optional<Failure>(std::size_t)>& check,
           Exec exec);

/// All compositions with at least min_m parts (sorted ascending, so each
/// multiset appears once) and total vertex count <= max_total. With fixed_m
/// set, exactly that many parts; max_part caps individual part sizes.
std::vector<MultipartiteSpec> compositions(long max_total, int min_m = 2,
                                           long max_part = 0, int fixed_m = 0);

// Named verification sweeps. Each checks a closed form against the exact
// linear-algebra oracle over an exhaustive or seeded-random range.

/// cof/det closed forms vs cofactor_sum/determinant of the assembled matrix.
Report closed_vs_oracle(long max_vertices, Exec exec = Exec::parallel);

/// classify_det/classify_cof verdicts vs (determinant == 0)/(cof == 0),
/// including witness checks for the case-2 instances.
Report singularity_agreement(long max_vertices, Exec exec = Exec::parallel);

/// Block-form inverse: product with D is exactly I (both sides), and the
/// rank-one form matches wherever cof != 0.
Report single_block_inverse(long max_vertices, Exec exec = Exec::parallel);

/// All eight LapExp conditions on every single block with cof != 0.
Report single_block_lapexp(long max_vertices, Exec exec = Exec::parallel);

/// Seeded random multi-block graphs (every block cof != 0): distance matrix
/// built two ways, per-block composition vs oracle det/cof, LapExp
/// conditions, and the rank-one inverse vs the oracle inverse when
/// lambda != 0.
Report multiblock_random(int count, int max_vertices, std::uint64_t seed,
                         Exec exec = Exec::parallel);

}  // namespace distblock::sweep
