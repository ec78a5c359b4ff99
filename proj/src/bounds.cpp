#include <c4star/bounds.hpp>

#include <c4star/errors.hpp>
#include <c4star/gf.hpp>

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace c4star {

namespace {

    constexpr int max_table_n = 20000;

    auto ceil_div(long long a, long long b) -> long long
    {
        long long q = a / b;
        return (a % b != 0 && ((a < 0) == (b < 0))) ? q + 1 : q;
    }

    auto floor_div(long long a, long long b) -> long long
    {
        long long q = a / b;
        return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
    }

    // Sieve of prime powers, grown on demand and never shrunk.
    class PrimePowerSieve
    {
    public:
        auto contains(long long q) -> bool
        {
            if (q < 2)
                return false;
            std::lock_guard lock(mutex_);
            if (q >= static_cast<long long>(flags_.size()))
                grow(static_cast<int>(std::max<long long>(q, 2 * static_cast<long long>(flags_.size()))));
            return flags_[static_cast<std::size_t>(q)];
        }

    private:
        auto grow(int cap) -> void
        {
            flags_.assign(static_cast<std::size_t>(cap) + 1, false);
            for (int q : prime_powers_up_to(cap))
                flags_[static_cast<std::size_t>(q)] = true;
        }

        std::mutex mutex_;
        std::vector<bool> flags_ = initial();

        static auto initial() -> std::vector<bool>
        {
            std::vector<bool> f(257, false);
            for (int q : prime_powers_up_to(256))
                f[static_cast<std::size_t>(q)] = true;
            return f;
        }
    };

    auto is_pp(long long q) -> bool
    {
        static PrimePowerSieve sieve;
        if (q > std::numeric_limits<int>::max() / 2)
            return is_prime_power(q);
        return sieve.contains(q);
    }

    struct Hit
    {
        long long value;
        std::string detail;
    };

    auto str(std::ostringstream & os) -> std::string { return os.str(); }

    auto theorem_A_hit(long long s, long long n) -> std::optional<Hit>
    {
        if (s < 2)
            return std::nullopt;
        for (long long a = -1; a <= s / 2 - 1; ++a) {
            if ((n - a) % s != 0)
                continue;
            long long k = (n - a) / s;
            if (k >= 1 && k <= s - (2 * a + 1)) {
                std::ostringstream os;
                os << "k=" << k << ", a=" << a;
                return Hit{k + 2, str(os)};
            }
        }
        return std::nullopt;
    }

    auto theorem_B_hit(long long s, long long n) -> std::optional<Hit>
    {
        if (s < 3 || s % 2 == 0)
            return std::nullopt;
        for (int j = 1; 2 * j <= 62; ++j) {
            long long big = 1LL << (2 * j);
            long long nj = big - (1LL << j) - 1;
            if (nj > n)
                break;
            if (nj != n)
                continue;
            long long four_m = 1; // 4^m mod s
            for (int m = 1; m <= j; ++m) {
                four_m = four_m * 4 % s;
                if (j % m == 0 && four_m == 1 % s && m < 62 && (1LL << m) >= s) {
                    std::ostringstream os;
                    os << "m=" << m << ", k=" << j / m;
                    return Hit{(big - 1) / s + 1, str(os)};
                }
            }
        }
        return std::nullopt;
    }

    auto theorem_C_hits(long long n) -> std::vector<Hit>
    {
        std::vector<Hit> out;
        auto add = [&](long long v, long long q, int item, std::optional<long long> k = {}) {
            std::ostringstream os;
            os << "item " << item << ", q=" << q;
            if (k)
                os << ", k=" << *k;
            out.push_back({v, str(os)});
        };
        for (long long q = 3; (q - 1) * (q - 1) - 2 <= n; ++q) {
            if (! is_pp(q))
                continue;
            if (q * q - 2 == n)
                add((q * q + q) / 2, q, 1);
            if (q % 2 == 0 && q >= 8) {
                long long k = q * q - 1 - n;
                if (k >= 3 && k <= q - 3 && k % 2 == 1)
                    add((q * q + q - k + 1) / 2, q, 2, k);
            }
            if (q % 2 == 0 && (q - 1) * (q - 1) - 2 == n)
                add(((q - 1) * (q - 1) + q - 3) / 2 + 1, q, 3);
            if (q % 2 == 1) {
                long long k = q * q - n;
                if (k >= 2 && k <= 2 * ceil_div(q, 4) && k % 2 == 0)
                    add((q * q + q - k) / 2 + 1, q, 4, k);
            }
        }
        return out;
    }

    auto theorem_D_hit(long long s, long long n) -> std::optional<Hit>
    {
        long long q = s;
        if (! is_pp(q) || (n - 1) % (q - 1) != 0)
            return std::nullopt;
        long long m = (n - 1) / (q - 1);
        if (m < 1 || m > q)
            return std::nullopt;
        std::ostringstream os;
        os << "q=" << q << ", i=" << q - m;
        return Hit{m + 2, str(os)};
    }

    auto theorem_E_hits(long long s, long long n) -> std::vector<Hit>
    {
        std::vector<Hit> out;
        if (s >= 1 && (n - 2) % s == 0) {
            long long q = (n - 2) / s + 2;
            long long k = q - s;
            if (q >= 5 && is_pp(q) && k >= 0 && k <= q / 2 - 1) {
                std::ostringstream os;
                os << "item 1, q=" << q << ", k=" << k;
                out.push_back({q + 1, str(os)});
            }
        }
        long long q = s + 1;
        if (q >= 3 && is_pp(q) && n == s * s + 1) {
            std::ostringstream os;
            os << "item 2, q=" << q;
            out.push_back({q + 2, str(os)});
        }
        return out;
    }

    auto pot_primo_inf_hit(long long s, long long n) -> std::optional<Hit>
    {
        if (s < 2)
            return std::nullopt;
        // n = (s-1)m + k + 1 with q = s + k and m = q - i.
        std::optional<Hit> best;
        for (long long m = 1; (s - 1) * m + 1 <= n; ++m) {
            long long k = n - 1 - (s - 1) * m;
            long long q = s + k;
            if (m > q || ! is_pp(q))
                continue;
            long long i = q - m;
            if (i == 0 && k > 1)
                continue;
            if (! best || m + 2 > best->value) {
                std::ostringstream os;
                os << "q=" << q << ", i=" << i << ", k=" << k;
                best = Hit{m + 2, str(os)};
            }
        }
        return best;
    }

    auto ramsey3_hit(long long s, long long n) -> std::optional<std::pair<Interval, std::string>>
    {
        for (long long k : {0LL, 1LL}) {
            long long q = isqrt(n - k);
            if (q * q != n - k)
                continue;
            if (auto iv = prop_ramsey3(s, q, k)) {
                std::ostringstream os;
                os << "q=" << q << ", k=" << k;
                return std::pair{*iv, str(os)};
            }
        }
        return std::nullopt;
    }

    auto plus_one_hypothesis(long long s, long long n, long long c) -> bool
    {
        // n < cs - (1 + sqrt(D))/2  <=>  sqrt(D) < 2cs - 1 - 2n
        long long d = 4 * s * (c + 1) - 3;
        long long r = 2 * c * s - 1 - 2 * n;
        return r > 0 && d < r * r;
    }


    // Keys of the rules that attain the final bounds. Monotonicity counts
    // only when no exact result already fixes the cell; the +1 growth rule
    // is listed on every open cell where its hypothesis holds.
    auto assign_keys(BoundResult & r) -> void
    {
        r.provenance.clear();
        bool fixed_directly = false;
        for (const auto & e : r.trace)
            if (e.rule != Rule::Monotone && e.lower == r.lower && e.upper == r.lower)
                fixed_directly = true;
        for (const auto & e : r.trace) {
            auto key = legend_key(e.rule);
            if (! key)
                continue;
            bool attains = e.lower == r.lower || e.upper == r.upper;
            if (e.rule == Rule::Monotone)
                attains = attains && ! fixed_directly;
            if (e.rule == Rule::PlusOne)
                attains = attains || ! r.exact();
            if (attains)
                r.provenance.insert(*key);
        }
    }

} // namespace

auto isqrt(long long t) -> long long
{
    if (t < 0)
        throw std::domain_error("isqrt of a negative number");
    if (t < 2)
        return t;
    // Newton iteration from above converges monotonically to the floor.
    long long x = t / 2 + 1;
    long long y = (x + t / x) / 2;
    while (y < x) {
        x = y;
        y = (x + t / x) / 2;
    }
    return x;
}

auto SqrtQuotient::t_is_square() const -> bool
{
    long long r = isqrt(t);
    return r * r == t;
}

auto SqrtQuotient::is_integer() const -> bool
{
    return t_is_square() && (n + isqrt(t)) % s == 0;
}

auto SqrtQuotient::ceil() const -> long long
{
    long long r = isqrt(t);
    if (r * r == t)
        return ceil_div(n + r, s);
    // r < sqrt t < r + 1 and no multiple of s lies strictly inside (n+r, n+r+1).
    return floor_div(n + r, s) + 1;
}

auto r_upper_parsons(long long n) -> long long
{
    long long r = isqrt(n);
    return n + (r * r == n ? r : r + 1) + 1;
}

auto r_exact(long long n) -> std::optional<RamseyValue>
{
    if (n < 2)
        throw InvalidParams("r(n) needs n >= 2");
    std::optional<RamseyValue> out;
    auto add = [&](long long value, int clause, long long q, long long k) {
        if (out && out->value != value) {
            std::ostringstream os;
            os << "r(" << n << ") is " << out->value << " by clause " << out->sources.front().clause
               << " but " << value << " by clause " << clause;
            throw ConflictingClauses(os.str());
        }
        if (! out)
            out = RamseyValue{n, value, {}};
        out->sources.push_back({clause, static_cast<int>(q), static_cast<int>(k)});
    };
    for (long long q = 2; (q - 1) * (q - 1) - 2 <= n; ++q) {
        if (! is_pp(q))
            continue;
        long long q2 = q * q;
        for (long long k : {0LL, 1LL})
            if (q2 + k == n)
                add(q2 + q + 1 + k, 1, q, k);
        if (q >= 3 && q2 - 2 == n)
            add(q2 + q - 1, 2, q, 0);
        if (q % 2 == 0 && q2 - q - 1 == n)
            add(q2, 3, q, 0);
        if (q % 2 == 0 && q >= 4) {
            long long k = q2 - 1 - n;
            if (k >= 0 && k <= q && k != 1 && k != q - 1)
                add(q2 + q - k, 4, q, k);
            for (long long k5 : {-2LL, 0LL, 1LL})
                if ((q - 1) * (q - 1) + k5 == n)
                    add((q - 1) * (q - 1) + q + k5, 5, q, k5);
        }
        if (q % 2 == 1) {
            long long k = q2 - n;
            long long top = 2 * ceil_div(q, 4);
            if (k >= 1 && k <= top && k != top - 1)
                add(q2 + q - k + 1, 6, q, k);
        }
    }
    return out;
}

auto upper_limsup(long long s, long long n) -> long long
{
    SqrtQuotient x{n, n + s - 1, s};
    if (x.is_integer())
        return (n + isqrt(x.t)) / s + 2;
    return x.ceil() + 1;
}

auto exact_cond_arith(long long s, long long n) -> std::optional<long long>
{
    SqrtQuotient x{n, n + s - 1, s};
    if (x.is_integer())
        return std::nullopt;
    long long c = x.ceil();
    if (c <= (n + 1) / s + 1)
        return c + 1;
    return std::nullopt;
}

auto theorem_A(long long s, long long n) -> std::optional<long long>
{
    if (auto h = theorem_A_hit(s, n))
        return h->value;
    return std::nullopt;
}

auto lower_from_r(long long s, long long n) -> std::optional<long long>
{
    if (auto r = r_exact(n))
        return (r->value - 1) / s + 1;
    return std::nullopt;
}

auto euler_phi(long long s) -> long long
{
    long long result = s;
    for (long long p = 2; p * p <= s; ++p) {
        if (s % p != 0)
            continue;
        while (s % p == 0)
            s /= p;
        result -= result / p;
    }
    if (s > 1)
        result -= result / s;
    return result;
}

auto theorem_B(long long s, long long n) -> std::optional<long long>
{
    if (auto h = theorem_B_hit(s, n))
        return h->value;
    return std::nullopt;
}

auto corollary_phi(long long s, long long k) -> std::optional<ExactClass>
{
    if (s < 3 || s % 2 == 0 || k < 1)
        throw InvalidParams("corollary needs odd s >= 3 and k >= 1");
    long long j = euler_phi(s) * k;
    if (2 * j > 62)
        return std::nullopt;
    long long big = 1LL << (2 * j);
    return ExactClass{s, big - (1LL << j) - 1, (big - 1) / s + 1};
}

auto theorem_C(long long n) -> std::optional<long long>
{
    auto hits = theorem_C_hits(n);
    if (hits.empty())
        return std::nullopt;
    for (const auto & h : hits)
        if (h.value != hits.front().value)
            throw ConflictingClauses("Theorem C items disagree at n=" + std::to_string(n));
    return hits.front().value;
}

auto theorem_D(long long q, long long i) -> ExactClass
{
    if (! is_pp(q))
        throw NotPrimePower(q);
    if (i < 0 || i > q - 1)
        throw InvalidParams("Theorem D needs 0 <= i <= q-1");
    return {q, (q - 1) * (q - i) + 1, q - i + 2};
}

auto theorem_E1(long long q, long long k) -> ExactClass
{
    if (! is_pp(q))
        throw NotPrimePower(q);
    if (q < 5 || k < 0 || k > q / 2 - 1)
        throw InvalidParams("Theorem E(1) needs q >= 5 and 0 <= k <= q/2 - 1");
    return {q - k, (q - k) * (q - 2) + 2, q + 1};
}

auto theorem_E2(long long q) -> ExactClass
{
    if (! is_pp(q))
        throw NotPrimePower(q);
    if (q < 3)
        throw InvalidParams("Theorem E(2) needs q >= 3");
    return {q - 1, (q - 1) * (q - 1) + 1, q + 2};
}

auto prop_q2q1(long long q) -> ExactClass
{
    if (! is_pp(q))
        throw NotPrimePower(q);
    return {q, q * q - q + 1, q + 2};
}

auto prop_pot_primo_inf(long long q, long long i, long long k) -> LowerClass
{
    if (! is_pp(q))
        throw NotPrimePower(q);
    if (i < 0 || i > q - 1 || k < 0 || k > q - 2)
        throw InvalidParams("needs 0 <= i <= q-1 and 0 <= k <= q-2");
    if (i == 0 && k > 1)
        throw ExcludedCase("i = 0 with k > 1 is excluded");
    return {q - k, (q - k - 1) * (q - i) + k + 1, q - i + 2};
}

auto prop_ramsey3(long long s, long long q, long long k) -> std::optional<Interval>
{
    if (s < 2 || q < 4 || ! is_pp(q) || (k != 0 && k != 1) || s > 2 * (q + 1) - k)
        return std::nullopt;
    long long n = q * q + k;
    SqrtQuotient l{n, n + s - 1, s};
    if (l.is_integer())
        return std::nullopt;
    return Interval{l.ceil(), l.ceil() + 1};
}

auto theorem_D_at(long long s, long long n) -> std::optional<long long>
{
    if (auto h = theorem_D_hit(s, n))
        return h->value;
    return std::nullopt;
}

auto theorem_E_at(long long s, long long n) -> std::optional<long long>
{
    auto hits = theorem_E_hits(s, n);
    if (hits.empty())
        return std::nullopt;
    return hits.front().value;
}

auto pot_primo_inf_at(long long s, long long n) -> std::optional<long long>
{
    if (auto h = pot_primo_inf_hit(s, n))
        return h->value;
    return std::nullopt;
}

auto ramsey3_at(long long s, long long n) -> std::optional<Interval>
{
    if (auto h = ramsey3_hit(s, n))
        return h->first;
    return std::nullopt;
}

auto legend_key(Rule r) -> std::optional<char>
{
    switch (r) {
    case Rule::TheoremA: return 'A';
    case Rule::TheoremB: return 'B';
    case Rule::TheoremC: return 'C';
    case Rule::TheoremD: return 'D';
    case Rule::TheoremE: return 'E';
    case Rule::PlusOne: return 'F';
    case Rule::CondArith: return 'G';
    case Rule::LowerFromR: return 'H';
    case Rule::Ramsey3: return 'I';
    case Rule::PotPrimoInf: return 'J';
    case Rule::Monotone: return 'K';
    case Rule::LimSup:
    case Rule::PlusTwo: return std::nullopt;
    }
    return std::nullopt;
}

auto rule_name(Rule r) -> std::string_view
{
    switch (r) {
    case Rule::TheoremA: return "Theorem A";
    case Rule::TheoremB: return "Theorem B";
    case Rule::TheoremC: return "Theorem C";
    case Rule::TheoremD: return "Theorem D";
    case Rule::TheoremE: return "Theorem E";
    case Rule::PlusOne: return "conditional +1 growth";
    case Rule::CondArith: return "regular witness";
    case Rule::LowerFromR: return "exact r(n)";
    case Rule::Ramsey3: return "square neighbourhood";
    case Rule::PotPrimoInf: return "polarity construction";
    case Rule::Monotone: return "monotonicity";
    case Rule::LimSup: return "cherry count";
    case Rule::PlusTwo: return "+2 growth";
    }
    return "?";
}

auto BoundResult::keys(std::string_view sep) const -> std::string
{
    std::string out;
    for (char k : provenance) {
        if (! out.empty())
            out += sep;
        out += k;
    }
    return out;
}

auto BoundResult::value_text() const -> std::string
{
    if (exact())
        return std::to_string(lower);
    return std::to_string(lower) + "-" + std::to_string(upper);
}

auto direct_bounds(int s, int n) -> BoundResult
{
    if (s < 2 || n < 2)
        throw InvalidParams("bounds need s >= 2 and n >= 2");
    BoundResult out;
    out.s = s;
    out.n = n;
    out.lower = 2;
    out.upper = upper_limsup(s, n);
    out.trace.push_back({Rule::LimSup, std::nullopt, out.upper, "t=" + std::to_string(n + s - 1)});

    auto exact = [&](Rule r, const Hit & h) {
        out.trace.push_back({r, h.value, h.value, h.detail});
    };
    if (auto h = theorem_A_hit(s, n))
        exact(Rule::TheoremA, *h);
    if (auto h = theorem_B_hit(s, n))
        exact(Rule::TheoremB, *h);
    if (s == 2)
        for (const auto & h : theorem_C_hits(n))
            exact(Rule::TheoremC, h);
    if (auto h = theorem_D_hit(s, n))
        exact(Rule::TheoremD, *h);
    for (const auto & h : theorem_E_hits(s, n))
        exact(Rule::TheoremE, h);
    if (auto v = exact_cond_arith(s, n))
        exact(Rule::CondArith, {*v, ""});
    if (auto r = r_exact(n)) {
        std::ostringstream os;
        os << "r(" << n << ")=" << r->value << " by clause " << r->sources.front().clause
           << ", q=" << r->sources.front().q;
        out.trace.push_back({Rule::LowerFromR, (r->value - 1) / s + 1, std::nullopt, os.str()});
    }
    if (auto h = ramsey3_hit(s, n))
        out.trace.push_back({Rule::Ramsey3, h->first.lower, h->first.upper, h->second});
    if (auto h = pot_primo_inf_hit(s, n))
        out.trace.push_back({Rule::PotPrimoInf, h->value, std::nullopt, h->detail});

    for (const auto & e : out.trace) {
        if (e.lower)
            out.lower = std::max(out.lower, *e.lower);
        if (e.upper)
            out.upper = std::min(out.upper, *e.upper);
    }
    assign_keys(out);
    return out;
}

auto propagate(BoundGrid & cells) -> void
{
    BoundGrid base = cells;
    for (;;) {
        bool changed = false;
        for (auto & [key, cell] : cells) {
            const auto & start = base.at(key);
            BoundResult next = start;
            auto prev_it = cells.find({key.first, key.second - 1});
            if (prev_it == cells.end())
                next.trace.push_back({Rule::Monotone, 2, std::nullopt, "trivial floor"});
            else {
                const auto & prev = prev_it->second;
                auto s = static_cast<long long>(key.first);
                long long floor_lower = std::max<long long>(2, prev.lower);
                next.trace.push_back({Rule::Monotone, floor_lower, std::nullopt,
                                      "from n=" + std::to_string(prev.n)});
                next.lower = std::max(next.lower, floor_lower);
                if (plus_one_hypothesis(s, prev.n, prev.lower)) {
                    next.trace.push_back({Rule::PlusOne, std::nullopt, prev.upper + 1,
                                          "c=" + std::to_string(prev.lower)});
                    next.upper = std::min(next.upper, prev.upper + 1);
                }
                if (prev.exact()) {
                    next.trace.push_back({Rule::PlusTwo, std::nullopt, prev.upper + 2,
                                          "from n=" + std::to_string(prev.n)});
                    next.upper = std::min(next.upper, prev.upper + 2);
                }
            }
            assign_keys(next);
            if (next.lower != cell.lower || next.upper != cell.upper || next.provenance != cell.provenance)
                changed = true;
            cell = std::move(next);
        }
        if (! changed)
            break;
    }
    for (const auto & [key, cell] : cells) {
        if (cell.lower > cell.upper) {
            std::ostringstream os;
            os << "M_" << key.first << "(" << key.second << "): lower " << cell.lower << " exceeds upper "
               << cell.upper;
            throw InconsistentBounds(os.str());
        }
    }
}

namespace {

    auto row(int s, int n_hi) -> BoundGrid
    {
        if (n_hi > max_table_n)
            throw InvalidParams("n above " + std::to_string(max_table_n) + " is not supported");
        BoundGrid cells;
        for (int n = 2; n <= n_hi; ++n)
            cells.emplace(std::pair{s, n}, direct_bounds(s, n));
        return cells;
    }

} // namespace

auto best_bounds(int s, int n) -> BoundResult
{
    if (s < 2 || n < 2)
        throw InvalidParams("bounds need s >= 2 and n >= 2");
    auto cells = row(s, n);
    propagate(cells);
    return cells.at({s, n});
}

BoundsTable::BoundsTable(std::pair<int, int> s_range, std::pair<int, int> n_range) :
    s_range_(s_range),
    n_range_(n_range)
{
    if (s_range.first < 2 || n_range.first < 2 || s_range.first > s_range.second
        || n_range.first > n_range.second)
        throw InvalidParams("table ranges need 2 <= lo <= hi");
    for (int s = s_range.first; s <= s_range.second; ++s)
        cells_.merge(row(s, n_range.second));
    propagate(cells_);
}

auto BoundsTable::at(int s, int n) const -> const BoundResult &
{
    return cells_.at({s, n});
}

auto BoundsTable::to_markdown() const -> std::string
{
    std::ostringstream os;
    os << "| s \\ n |";
    for (int n = n_range_.first; n <= n_range_.second; ++n)
        os << ' ' << n << " |";
    os << "\n|---|";
    for (int n = n_range_.first; n <= n_range_.second; ++n)
        os << "---|";
    os << '\n';
    for (int s = s_range_.first; s <= s_range_.second; ++s) {
        os << "| " << s << " |";
        for (int n = n_range_.first; n <= n_range_.second; ++n) {
            const auto & c = at(s, n);
            os << ' ' << c.value_text();
            if (c.provenance.size() == 1)
                os << '^' << c.keys();
            else if (! c.provenance.empty())
                os << "^{" << c.keys(",") << '}';
            os << " |";
        }
        os << '\n';
    }
    return os.str();
}

auto BoundsTable::to_csv() const -> std::string
{
    std::ostringstream os;
    os << "s,n,lower,upper,keys\n";
    for (int s = s_range_.first; s <= s_range_.second; ++s)
        for (int n = n_range_.first; n <= n_range_.second; ++n) {
            const auto & c = at(s, n);
            os << s << ',' << n << ',' << c.lower << ',' << c.upper << ',' << c.keys() << '\n';
        }
    return os.str();
}

auto table(std::pair<int, int> s_range, std::pair<int, int> n_range) -> BoundsTable
{
    return BoundsTable(s_range, n_range);
}

auto explain(const BoundResult & r) -> std::string
{
    std::ostringstream os;
    os << "M_" << r.s << "(" << r.n << ") ";
    if (r.exact())
        os << "= " << r.lower;
    else
        os << "in [" << r.lower << ", " << r.upper << "]";
    if (! r.provenance.empty())
        os << "  keys " << r.keys(",");
    os << '\n';
    for (const auto & e : r.trace) {
        os << "  " << rule_name(e.rule);
        if (auto k = legend_key(e.rule))
            os << " (" << *k << ")";
        os << ": ";
        if (e.lower && e.upper && *e.lower == *e.upper)
            os << "= " << *e.lower;
        else {
            if (e.lower)
                os << ">= " << *e.lower;
            if (e.lower && e.upper)
                os << ", ";
            if (e.upper)
                os << "<= " << *e.upper;
        }
        if (! e.detail.empty())
            os << "  [" << e.detail << "]";
        os << '\n';
    }
    return os.str();
}

} // namespace c4star
