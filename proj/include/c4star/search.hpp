#pragma once

#include <c4star/polgraph.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace c4star {

/// Result of checking that g certifies M_s(n) > c.
struct WitnessCertificate
{
    MultipartiteGraph graph;
    int c = 0;
    int s = 0;
    int n = 0;
    bool fits_frame = false;
    bool c4_free = false;
    /// Every vertex of K_{c x s}, padding included, has complement degree <= n-1.
    bool complement_star_free = false;
    int min_degree = 0;        ///< over the padded frame
    int max_complement = 0;    ///< (c-1)s - min_degree

    auto valid() const -> bool { return fits_frame && c4_free && complement_star_free; }
};

/// Checks g as a subgraph of K_{c x s}, padding missing vertices as isolated.
auto verify_witness(const MultipartiteGraph & g, int c, int s, int n) -> WitnessCertificate;

/// s disjoint (c-1)-cycles in K_{(c-1) x s}. Needs c >= 4, c != 5.
auto gen_disjoint_cycles(int c, int s) -> MultipartiteGraph;
/// A Hamiltonian cycle through K_{(c-1) x s} for c in {3, 5}, s >= 2, (c,s) != (3,2).
auto gen_hamiltonian_witness(int c, int s) -> MultipartiteGraph;
/// Perfect matching in K_{2 x 2}.
auto gen_matching_2x2() -> MultipartiteGraph;

/// The regular witness used for M_s(n) > c - 1 when exact_cond_arith applies.
auto regular_witness(int c, int s) -> MultipartiteGraph;

enum class Verdict
{
    WitnessFound,
    Exhausted,
    BudgetExceeded,
};

auto to_string(Verdict v) -> std::string_view;

struct SearchOptions
{
    std::uint64_t budget = 100'000'000; ///< search-tree nodes
    int max_vertices = 16;
};

struct SearchOutcome
{
    Verdict verdict = Verdict::Exhausted;
    std::optional<MultipartiteGraph> witness;
    std::uint64_t nodes = 0;
};

/**
 * Decides whether some C4-free subgraph of K_{c x s} has minimum degree at
 * least (c-1)s - n + 1, i.e. certifies M_s(n) > c. Complete backtracking
 * over the edges in lexicographic order; an Exhausted verdict is a proof
 * that no witness exists. Throws InvalidParams when c*s exceeds
 * options.max_vertices.
 */
auto witness_exists(int c, int s, int n, const SearchOptions & options = {}) -> SearchOutcome;

struct FrameVerdict
{
    int c = 0;
    Verdict verdict = Verdict::Exhausted;
    std::uint64_t nodes = 0;
};

struct ExactSearch
{
    int s = 0;
    int n = 0;
    int lower = 2;
    std::optional<int> upper; ///< set once some frame is exhausted
    std::vector<FrameVerdict> frames;
    std::uint64_t nodes = 0;

    auto exact() const -> bool { return upper && *upper == lower; }
    auto budget_exceeded() const -> bool;
};

/// Scans c = 2, 3, ..., c_max; the first exhausted frame is M_s(n).
auto exact_M(int s, int n, int c_max, const SearchOptions & options = {}) -> ExactSearch;

} // namespace c4star
