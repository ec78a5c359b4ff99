#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace c4star {

// ---------------------------------------------------------------------------
// Exact arithmetic on (n + sqrt(t)) / s. No floating point anywhere.

/// floor(sqrt(t)) for t >= 0.
auto isqrt(long long t) -> long long;

/// The real number (n + sqrt(t)) / s, s > 0, t >= 0.
struct SqrtQuotient
{
    long long n = 0;
    long long t = 0;
    long long s = 1;

    auto t_is_square() const -> bool;
    auto is_integer() const -> bool;
    auto ceil() const -> long long;
};

// ---------------------------------------------------------------------------
// Classical r(n) = r(C4; K_{1,n}).

/// n + ceil(sqrt(n)) + 1.
auto r_upper_parsons(long long n) -> long long;

struct RamseyClauseHit
{
    int clause = 0; ///< 1..6
    int q = 0;
    int k = 0;
};

struct RamseyValue
{
    long long n = 0;
    long long value = 0;
    std::vector<RamseyClauseHit> sources;
};

/// The exact value of r(n) when one of the known prime-power classes
/// covers n. Throws ConflictingClauses if two classes disagree.
auto r_exact(long long n) -> std::optional<RamseyValue>;

// ---------------------------------------------------------------------------
// Closed-form bounds on M_s(n) = M_s(C4; K_{1,n}).

/// With t = n + s - 1: (n + sqrt t)/s + 2 when sqrt t is an integer and s
/// divides n + sqrt t, otherwise ceil((n + sqrt t)/s) + 1.
auto upper_limsup(long long s, long long n) -> long long;

/// ceil((n + sqrt t)/s) + 1 when (n + sqrt t)/s is not an integer and
/// ceil((n + sqrt t)/s) <= floor((n+1)/s) + 1.
auto exact_cond_arith(long long s, long long n) -> std::optional<long long>;

/// M_s(ks + a) = k + 2 for -1 <= a <= floor(s/2) - 1, 1 <= k <= s - (2a+1).
auto theorem_A(long long s, long long n) -> std::optional<long long>;

/// floor((r(n) - 1)/s) + 1 when r(n) is known exactly.
auto lower_from_r(long long s, long long n) -> std::optional<long long>;

auto euler_phi(long long s) -> long long;

/// M_s(4^(mk) - 2^(mk) - 1) = (4^(mk) - 1)/s + 1 for odd s >= 3, m with
/// 4^m = 1 (mod s) and 2^m >= s.
auto theorem_B(long long s, long long n) -> std::optional<long long>;

struct ExactClass
{
    long long s = 0;
    long long n = 0;
    long long value = 0;

    auto operator==(const ExactClass &) const -> bool = default;
};

/// Theorem B with m = phi(s); nullopt if n overflows 62 bits.
auto corollary_phi(long long s, long long k) -> std::optional<ExactClass>;

/// s = 2 exact classes near q^2 and (q-1)^2.
auto theorem_C(long long n) -> std::optional<long long>;

/// M_q((q-1)(q-i)+1) = q-i+2, 0 <= i <= q-1.
auto theorem_D(long long q, long long i) -> ExactClass;
/// M_{q-k}((q-k)(q-2)+2) = q+1 for q >= 5, 0 <= k <= floor(q/2)-1.
auto theorem_E1(long long q, long long k) -> ExactClass;
/// M_{q-1}((q-1)^2+1) = q+2 for q >= 3.
auto theorem_E2(long long q) -> ExactClass;
/// M_q(q^2-q+1) = q+2.
auto prop_q2q1(long long q) -> ExactClass;

struct LowerClass
{
    long long s = 0;
    long long n = 0;
    long long lower = 0;
};

/// M_{q-k}((q-k-1)(q-i)+k+1) >= q-i+2. Throws ExcludedCase for i = 0, k > 1.
auto prop_pot_primo_inf(long long q, long long i, long long k) -> LowerClass;

struct Interval
{
    long long lower = 0;
    long long upper = 0;

    auto operator==(const Interval &) const -> bool = default;
};

/// [ceil L, ceil L + 1] for M_s(q^2+k), k in {0,1}, when L = (q^2+k+sqrt(q^2+k+s-1))/s
/// is not an integer, q >= 4 a prime power and s <= 2(q+1)-k.
auto prop_ramsey3(long long s, long long q, long long k) -> std::optional<Interval>;

// Lookups by (s, n): which instance of a parametrised result covers the cell.
auto theorem_D_at(long long s, long long n) -> std::optional<long long>;
auto theorem_E_at(long long s, long long n) -> std::optional<long long>;
auto pot_primo_inf_at(long long s, long long n) -> std::optional<long long>;
auto ramsey3_at(long long s, long long n) -> std::optional<Interval>;

// ---------------------------------------------------------------------------
// Combining rules into a table.

enum class Rule
{
    TheoremA,
    TheoremB,
    TheoremC,
    TheoremD,
    TheoremE,
    PlusOne,     ///< M_s(n+1) <= M_s(n) + 1 under its hypothesis
    CondArith,
    LowerFromR,
    Ramsey3,
    PotPrimoInf,
    Monotone,    ///< 2 <= M_s(n) <= M_s(n+1)
    LimSup,
    PlusTwo,     ///< M_s(n+1) <= M_s(n) + 2
};

/// Key letter used in the table legend; LimSup and PlusTwo have none.
auto legend_key(Rule r) -> std::optional<char>;
auto rule_name(Rule r) -> std::string_view;

struct Evidence
{
    Rule rule;
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::string detail;
};

struct BoundResult
{
    int s = 0;
    int n = 0;
    long long lower = 2;
    long long upper = 0;
    /// Legend keys of the rules that fired for this cell. The monotone key
    /// K is recorded when it reaches the final lower bound and no exact
    /// result fixes the cell.
    std::set<char> provenance;
    std::vector<Evidence> trace;

    auto exact() const -> bool { return lower == upper; }
    auto keys(std::string_view sep = "") const -> std::string;
    /// "6" or "4-5"
    auto value_text() const -> std::string;
};

using BoundGrid = std::map<std::pair<int, int>, BoundResult>;

/// Cell with every direct (non-propagated) rule applied.
auto direct_bounds(int s, int n) -> BoundResult;

/**
 * Applies the growth rules between neighbouring cells (s,n) -> (s,n+1)
 * until nothing changes:
 *   lower(s,n+1) >= lower(s,n)                       (K)
 *   upper(s,n+1) <= upper(s,n) + 1 if n < cs - (1 + sqrt(4s(c+1)-3))/2
 *                   holds at c = lower(s,n)          (F)
 *   upper(s,n+1) <= M_s(n) + 2 when (s,n) is exact
 * Throws InconsistentBounds if some cell ends with lower > upper.
 */
auto propagate(BoundGrid & cells) -> void;

/// Best bounds on M_s(n), s >= 2, n >= 2.
auto best_bounds(int s, int n) -> BoundResult;

class BoundsTable
{
public:
    BoundsTable(std::pair<int, int> s_range, std::pair<int, int> n_range);

    auto at(int s, int n) const -> const BoundResult &;
    auto s_range() const -> std::pair<int, int> { return s_range_; }
    auto n_range() const -> std::pair<int, int> { return n_range_; }

    auto to_markdown() const -> std::string;
    auto to_csv() const -> std::string;

private:
    std::pair<int, int> s_range_, n_range_;
    BoundGrid cells_;
};

auto table(std::pair<int, int> s_range, std::pair<int, int> n_range) -> BoundsTable;

/// Multi-line explanation of a cell, one rule per line.
auto explain(const BoundResult & r) -> std::string;

} // namespace c4star
