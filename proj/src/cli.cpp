#include <c4star/cli.hpp>

#include <c4star/bounds.hpp>
#include <c4star/errors.hpp>
#include <c4star/graph_json.hpp>
#include <c4star/plane.hpp>
#include <c4star/polgraph.hpp>
#include <c4star/search.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace c4star::cli {

namespace {

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct NoInput : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // "a..b" or "a"
    auto parse_range(const std::string & text, const char * flag) -> std::pair<int, int>
    {
        auto dots = text.find("..");
        try {
            std::size_t used = 0;
            if (dots == std::string::npos) {
                int v = std::stoi(text, &used);
                if (used != text.size())
                    throw std::invalid_argument(text);
                return {v, v};
            }
            auto lo_text = text.substr(0, dots);
            auto hi_text = text.substr(dots + 2);
            int lo = std::stoi(lo_text, &used);
            if (used != lo_text.size())
                throw std::invalid_argument(text);
            int hi = std::stoi(hi_text, &used);
            if (used != hi_text.size())
                throw std::invalid_argument(text);
            return {lo, hi};
        } catch (const std::logic_error &) {
            throw UsageError(std::string(flag) + ": expected a..b, got '" + text + "'");
        }
    }

    auto yes_no(bool b) -> const char * { return b ? "yes" : "no"; }

    auto cmd_plane(int q, bool matrix, bool absolute, const std::string & format, std::ostream & out) -> int
    {
        ProjectivePlane plane(q);
        if (matrix) {
            auto m = plane.incidence_matrix();
            out << (format == "csv" ? m.to_csv() : m.to_ascii());
        }
        if (absolute) {
            if (format == "csv")
                out << "x,y\n";
            for (auto p : plane.absolute_points())
                out << (format == "csv" ? std::to_string(p.x) + "," + std::to_string(p.y) : to_string(p)) << '\n';
        }
        if (! matrix && ! absolute) {
            out << "projective plane of order " << q << '\n'
                << "points " << plane.size() << ", lines " << plane.size() << ", points per line " << q + 1 << '\n'
                << "absolute points " << plane.absolute_points().size() << '\n';
            auto report = check_axioms(plane.incidence());
            out << "axioms " << (report.ok ? "hold" : "fail: " + report.failure) << '\n';
        }
        return exit_ok;
    }

    auto cmd_construct(const ConstructionParams & params, const std::string & format, std::ostream & out,
                       std::ostream & err) -> int
    {
        params.validate();
        if (params.unbalanced_case())
            err << "note: with i = 0 and k > 1 the last class stays larger than the others\n";
        auto g = construct(params);
        if (format == "json")
            out << to_json(g, params).dump() << '\n';
        else
            out << g.adjacency_matrix();
        return exit_ok;
    }

    auto cmd_bounds(int s, int n, bool show_trace, std::ostream & out) -> int
    {
        auto r = best_bounds(s, n);
        if (show_trace) {
            out << explain(r);
            return exit_ok;
        }
        out << "M_" << s << "(" << n << ") ";
        if (r.exact())
            out << "= " << r.lower;
        else
            out << "in [" << r.lower << ", " << r.upper << "]";
        if (! r.provenance.empty())
            out << "  keys " << r.keys(",");
        out << '\n';
        return exit_ok;
    }

    auto cmd_table(const std::string & s_text, const std::string & n_text, const std::string & format,
                   std::ostream & out) -> int
    {
        auto t = table(parse_range(s_text, "--s"), parse_range(n_text, "--n"));
        out << (format == "csv" ? t.to_csv() : t.to_markdown());
        return exit_ok;
    }

    auto default_budget() -> std::uint64_t
    {
        const char * env = std::getenv("RM_BUDGET");
        if (env == nullptr || *env == '\0')
            return SearchOptions{}.budget;
        std::string text(env);
        if (text.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("RM_BUDGET must be a positive integer, got '" + text + "'");
        try {
            return std::stoull(text);
        } catch (const std::out_of_range &) {
            throw UsageError("RM_BUDGET out of range");
        }
    }

    auto cmd_search(int s, int n, int c_max, std::optional<std::uint64_t> budget, int max_vertices,
                    std::ostream & out) -> int
    {
        SearchOptions options;
        options.budget = budget ? *budget : default_budget();
        options.max_vertices = max_vertices;
        auto r = exact_M(s, n, c_max, options);
        for (const auto & f : r.frames)
            out << "c=" << f.c << " " << to_string(f.verdict) << " nodes=" << f.nodes << '\n';
        out << "M_" << s << "(" << n << ") ";
        if (r.exact())
            out << "= " << r.lower << '\n';
        else
            out << ">= " << r.lower << '\n';
        return r.budget_exceeded() ? exit_budget : exit_ok;
    }

    auto cmd_verify(const std::string & path, int c, int s, int n, std::istream & in, std::ostream & out) -> int
    {
        nlohmann::json doc;
        try {
            if (path == "-")
                doc = nlohmann::json::parse(in);
            else {
                std::ifstream file(path);
                if (! file)
                    throw NoInput("cannot read " + path);
                doc = nlohmann::json::parse(file);
            }
        } catch (const nlohmann::json::parse_error & e) {
            throw InvalidGraph(std::string("malformed JSON: ") + e.what());
        }
        auto parsed = graph_from_json(doc);
        auto cert = verify_witness(parsed.graph, c, s, n);
        out << "frame K_{" << c << "x" << s << "}, n = " << n << '\n'
            << "fits frame: " << yes_no(cert.fits_frame) << '\n'
            << "C4-free: " << yes_no(cert.c4_free) << '\n'
            << "complement K_{1," << n << "}-free: " << yes_no(cert.complement_star_free)
            << " (max complement degree " << cert.max_complement << ")\n";
        if (cert.valid())
            out << "valid: M_" << s << "(" << n << ") > " << c << '\n';
        else
            out << "invalid\n";
        return cert.valid() ? exit_ok : exit_invalid;
    }

} // namespace

auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Set multipartite Ramsey numbers M_s(C4; K_{1,n})", "c4star"};
    app.require_subcommand(1);

    int q = 0, i = 0, k = 0, s = 0, n = 0, c = 0;
    int c_max = 8, max_vertices = SearchOptions{}.max_vertices;
    bool matrix = false, absolute = false, show_trace = false;
    std::string plane_format = "ascii", construct_format = "json", table_format = "md";
    std::string s_range = "2..5", n_range = "2..17", graph_path;
    std::optional<std::uint64_t> budget;

    auto * plane = app.add_subcommand("plane", "projective plane of order q");
    plane->add_option("--q", q, "order (prime power)")->required();
    plane->add_flag("--matrix", matrix, "incidence matrix of the polarity");
    plane->add_flag("--absolute", absolute, "list absolute points");
    plane->add_option("--format", plane_format)->check(CLI::IsMember({"ascii", "csv"}));

    auto * cons = app.add_subcommand("construct", "graph G(q,i,k)");
    cons->add_option("--q", q)->required();
    cons->add_option("--i", i);
    cons->add_option("--k", k);
    cons->add_option("--out", construct_format)->check(CLI::IsMember({"json", "matrix"}));

    auto * bounds = app.add_subcommand("bounds", "best known bounds on M_s(n)");
    bounds->add_option("--s", s)->required();
    bounds->add_option("--n", n)->required();
    bounds->add_flag("--explain", show_trace, "list every rule that applies");

    auto * tab = app.add_subcommand("table", "table of bounds");
    tab->add_option("--s", s_range, "range a..b")->capture_default_str();
    tab->add_option("--n", n_range, "range a..b")->capture_default_str();
    tab->add_option("--format", table_format)->check(CLI::IsMember({"md", "csv"}));

    auto * srch = app.add_subcommand("search", "exact M_s(n) by exhaustive search");
    srch->add_option("--s", s)->required();
    srch->add_option("--n", n)->required();
    srch->add_option("--cmax", c_max)->capture_default_str();
    srch->add_option("--budget", budget, "node budget (default RM_BUDGET or 1e8)");
    srch->add_option("--max-vertices", max_vertices)->capture_default_str();

    auto * ver = app.add_subcommand("verify", "check a witness graph");
    ver->add_option("--graph", graph_path, "JSON file, or - for stdin")->required();
    ver->add_option("--c", c)->required();
    ver->add_option("--s", s)->required();
    ver->add_option("--n", n)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (plane->parsed())
            return cmd_plane(q, matrix, absolute, plane_format, out);
        if (cons->parsed())
            return cmd_construct({q, i, k}, construct_format, out, err);
        if (bounds->parsed())
            return cmd_bounds(s, n, show_trace, out);
        if (tab->parsed())
            return cmd_table(s_range, n_range, table_format, out);
        if (srch->parsed())
            return cmd_search(s, n, c_max, budget, max_vertices, out);
        if (ver->parsed())
            return cmd_verify(graph_path, c, s, n, in, out);
    } catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NoInput & e) {
        err << "error: " << e.what() << '\n';
        return exit_no_input;
    } catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}

} // namespace c4star::cli
