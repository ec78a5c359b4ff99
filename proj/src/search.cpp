#include <c4star/search.hpp>

#include <c4star/errors.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace c4star {

namespace {

    auto frame_graph(int classes, int s) -> MultipartiteGraph
    {
        std::vector<std::vector<VertexLabel>> labels(static_cast<std::size_t>(classes));
        for (int j = 0; j < classes; ++j)
            for (int l = 0; l < s; ++l)
                labels[static_cast<std::size_t>(j)].push_back({j, l});
        return MultipartiteGraph(labels);
    }

    auto choose2(long long d) -> long long { return d * (d - 1) / 2; }

    class Engine
    {
    public:
        Engine(int c, int s, int n, std::uint64_t budget) :
            c_(c), s_(s), n_vertices_(c * s), dmin_((c - 1) * s - n + 1), budget_(budget),
            adj_(static_cast<std::size_t>(n_vertices_), 0), deg_(static_cast<std::size_t>(n_vertices_), 0),
            remaining_(static_cast<std::size_t>(n_vertices_), (c - 1) * s)
        {
            for (int u = 0; u < n_vertices_; ++u)
                for (int v = u + 1; v < n_vertices_; ++v)
                    if (u / s != v / s)
                        pairs_.emplace_back(u, v);
            cherry_cap_ = choose2(n_vertices_);
            cherries_ = n_vertices_ * choose2(std::max(dmin_, 0));
        }

        auto run() -> SearchOutcome
        {
            SearchOutcome out;
            bool feasible = (c_ - 1) * s_ >= dmin_ && cherries_ <= cherry_cap_;
            bool found = false;
            if (feasible)
                found = dfs(0);
            else
                nodes_ = 1;
            out.nodes = nodes_;
            if (aborted_)
                out.verdict = Verdict::BudgetExceeded;
            else if (found) {
                out.verdict = Verdict::WitnessFound;
                out.witness = to_graph();
            } else
                out.verdict = Verdict::Exhausted;
            return out;
        }

    private:
        auto at(std::vector<int> & v, int i) -> int & { return v[static_cast<std::size_t>(i)]; }

        auto cherry_term(int v) const -> long long
        {
            return choose2(std::max(deg_[static_cast<std::size_t>(v)], dmin_));
        }

        // Degree of w is final; enforce the canonical orderings.
        auto canonical_at(int w) const -> bool
        {
            auto d = [&](int v) { return deg_[static_cast<std::size_t>(v)]; };
            if (w % s_ != 0 && d(w - 1) < d(w))
                return false;
            if (w % s_ == s_ - 1 && w >= s_) {
                int cur = w - s_ + 1;
                int prev = cur - s_;
                for (int l = 0; l < s_; ++l) {
                    if (d(prev + l) != d(cur + l))
                        return d(prev + l) > d(cur + l);
                }
            }
            return true;
        }

        auto creates_c4(int u, int v) const -> bool
        {
            std::uint64_t reach = 0;
            for (std::uint64_t m = adj_[static_cast<std::size_t>(u)]; m != 0; m &= m - 1)
                reach |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
            return (reach & adj_[static_cast<std::size_t>(v)]) != 0;
        }

        auto dfs(std::size_t p) -> bool
        {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            if (p == pairs_.size()) {
                for (int w = pairs_.empty() ? 0 : pairs_.back().first; w < n_vertices_; ++w)
                    if (! canonical_at(w))
                        return false;
                return true;
            }
            auto [u, v] = pairs_[p];
            if (p > 0 && pairs_[p - 1].first != u && ! canonical_at(u - 1))
                return false;

            // include uv
            bool row_ok = u % s_ == 0 || at(deg_, u) < at(deg_, u - 1);
            if (row_ok && ! creates_c4(u, v)) {
                long long before = cherry_term(u) + cherry_term(v);
                ++at(deg_, u);
                ++at(deg_, v);
                long long delta = cherry_term(u) + cherry_term(v) - before;
                cherries_ += delta;
                if (cherries_ <= cherry_cap_) {
                    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
                    --at(remaining_, u);
                    --at(remaining_, v);
                    if (dfs(p + 1))
                        return true;
                    ++at(remaining_, u);
                    ++at(remaining_, v);
                    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
                    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
                }
                cherries_ -= delta;
                --at(deg_, u);
                --at(deg_, v);
                if (aborted_)
                    return false;
            }

            // exclude uv
            --at(remaining_, u);
            --at(remaining_, v);
            bool ok = at(deg_, u) + at(remaining_, u) >= dmin_ && at(deg_, v) + at(remaining_, v) >= dmin_;
            bool found = ok && dfs(p + 1);
            ++at(remaining_, u);
            ++at(remaining_, v);
            return found;
        }

        auto to_graph() const -> MultipartiteGraph
        {
            auto g = frame_graph(c_, s_);
            for (auto [u, v] : pairs_)
                if ((adj_[static_cast<std::size_t>(u)] >> v) & 1U)
                    g.add_edge(u, v);
            return g;
        }

        int c_, s_, n_vertices_, dmin_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
        std::vector<std::pair<int, int>> pairs_;
        std::vector<std::uint64_t> adj_;
        std::vector<int> deg_;
        std::vector<int> remaining_;
        long long cherry_cap_ = 0;
        long long cherries_ = 0;
    };

} // namespace

auto verify_witness(const MultipartiteGraph & g, int c, int s, int n) -> WitnessCertificate
{
    WitnessCertificate cert;
    cert.graph = g;
    cert.c = c;
    cert.s = s;
    cert.n = n;
    auto f = frame(g);
    cert.fits_frame = c >= 1 && s >= 1 && f.classes <= c && f.max_size <= s;
    cert.c4_free = c4_free(g.graph());

    int frame_degree = (c - 1) * s;
    bool padded = g.size() < c * s;
    int min_degree = padded ? 0 : frame_degree;
    for (int v = 0; v < g.size(); ++v)
        min_degree = std::min(min_degree, g.degree(v));
    cert.min_degree = min_degree;
    cert.max_complement = frame_degree - min_degree;
    cert.complement_star_free = cert.fits_frame && cert.max_complement <= n - 1;
    return cert;
}

auto gen_disjoint_cycles(int c, int s) -> MultipartiteGraph
{
    if (c < 4 || c == 5 || s < 1)
        throw InvalidParams("disjoint cycles need c >= 4, c != 5, s >= 1");
    int len = c - 1;
    auto g = frame_graph(len, s);
    for (int l = 0; l < s; ++l)
        for (int j = 0; j < len; ++j)
            g.add_edge(VertexLabel{j, l}, VertexLabel{(j + 1) % len, l});
    return g;
}

auto gen_hamiltonian_witness(int c, int s) -> MultipartiteGraph
{
    if ((c != 3 && c != 5) || s < 2 || (c == 3 && s == 2))
        throw InvalidParams("Hamiltonian witness needs c in {3,5}, s >= 2, (c,s) != (3,2)");
    int last = c - 2; // classes 0..c-2
    auto g = frame_graph(c - 1, s);
    for (int l = 0; l < s; ++l)
        for (int j = 0; j < last; ++j)
            g.add_edge(VertexLabel{j, l}, VertexLabel{j + 1, l});
    for (int k = 0; k + 1 < s; ++k)
        g.add_edge(VertexLabel{last, k}, VertexLabel{0, k + 1});
    g.add_edge(VertexLabel{last, s - 1}, VertexLabel{0, 0});
    return g;
}

auto gen_matching_2x2() -> MultipartiteGraph
{
    auto g = frame_graph(2, 2);
    g.add_edge(VertexLabel{0, 0}, VertexLabel{1, 0});
    g.add_edge(VertexLabel{0, 1}, VertexLabel{1, 1});
    return g;
}

auto regular_witness(int c, int s) -> MultipartiteGraph
{
    if (c < 2 || s < 1)
        throw InvalidParams("regular witness needs c >= 2, s >= 1");
    if (c == 2)
        return frame_graph(1, s);
    if (c == 3 && s == 2)
        return gen_matching_2x2();
    if (c == 3 || c == 5)
        return gen_hamiltonian_witness(c, s);
    return gen_disjoint_cycles(c, s);
}

auto to_string(Verdict v) -> std::string_view
{
    switch (v) {
    case Verdict::WitnessFound: return "witness-found";
    case Verdict::Exhausted: return "exhausted";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

auto witness_exists(int c, int s, int n, const SearchOptions & options) -> SearchOutcome
{
    if (c < 1 || s < 1 || n < 1)
        throw InvalidParams("search needs c, s, n >= 1");
    int cap = std::min(options.max_vertices, 64);
    if (c * s > cap)
        throw InvalidParams("frame K_{" + std::to_string(c) + "x" + std::to_string(s) + "} exceeds "
                            + std::to_string(cap) + " vertices");
    auto out = Engine(c, s, n, options.budget).run();
    if (out.witness && ! verify_witness(*out.witness, c, s, n).valid())
        throw std::logic_error("search produced an invalid witness");
    return out;
}

auto ExactSearch::budget_exceeded() const -> bool
{
    return ! frames.empty() && frames.back().verdict == Verdict::BudgetExceeded;
}

auto exact_M(int s, int n, int c_max, const SearchOptions & options) -> ExactSearch
{
    if (s < 1 || n < 2)
        throw InvalidParams("exact_M needs s >= 1, n >= 2");
    ExactSearch out;
    out.s = s;
    out.n = n;
    c_max = std::min(c_max, std::min(options.max_vertices, 64) / s);
    for (int c = 2; c <= c_max; ++c) {
        SearchOptions left = options;
        left.budget = options.budget - std::min(options.budget, out.nodes);
        auto r = witness_exists(c, s, n, left);
        out.nodes += r.nodes;
        out.frames.push_back({c, r.verdict, r.nodes});
        if (r.verdict == Verdict::WitnessFound)
            out.lower = c + 1;
        else {
            if (r.verdict == Verdict::Exhausted)
                out.upper = c;
            break;
        }
    }
    return out;
}

} // namespace c4star
