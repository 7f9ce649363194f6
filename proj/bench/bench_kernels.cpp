// Compares the serial reference kernels against the OpenMP variants:
// fraction-free determinant on growing random integer matrices, and the
// composition verification sweep. Exact outputs must match; this target
// only reports wall-clock times.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "distblock/exact_linalg.hpp"
#include "distblock/sweep.hpp"

using namespace distblock;
using linalg::Exec;

namespace {

double seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> pick(-4, 4);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
    return m;
}

}  // namespace

int main() {
    std::puts("kernel                            size      serial    parallel");
    std::puts("---------------------------------------------------------------");

    std::mt19937_64 rng(1);
    for (std::size_t n : {96UL, 160UL, 224UL}) {
        ExactMatrix a = random_matrix(rng, n);
        Rational serial_det, parallel_det;
        double ts = seconds([&] { serial_det = linalg::determinant(a, Exec::serial); });
        double tp = seconds([&] { parallel_det = linalg::determinant(a, Exec::parallel); });
        std::printf("bareiss determinant            %4zux%-4zu  %7.3fs  %8.3fs%s\n", n, n,
                    ts, tp, serial_det == parallel_det ? "" : "  MISMATCH");
    }

    for (long verts : {12L, 13L}) {
        sweep::Report rs, rp;
        double ts = seconds([&] { rs = sweep::closed_vs_oracle(verts, Exec::serial); });
        double tp = seconds([&] { rp = sweep::closed_vs_oracle(verts, Exec::parallel); });
        std::printf("closed-vs-oracle sweep       <=%3ld verts  %7.3fs  %8.3fs%s\n",
                    verts, ts, tp,
                    rs.checked == rp.checked && rs.ok() == rp.ok() ? "" : "  MISMATCH");
    }

    {
        sweep::Report rs, rp;
        double ts = seconds(
            [&] { rs = sweep::multiblock_random(60, 28, 7, Exec::serial); });
        double tp = seconds(
            [&] { rp = sweep::multiblock_random(60, 28, 7, Exec::parallel); });
        std::printf("random multi-block suite        60 graphs  %7.3fs  %8.3fs%s\n", ts,
                    tp, rs.ok() == rp.ok() ? "" : "  MISMATCH");
    }
    return 0;
}
