#include <c4star/plane.hpp>

#include <c4star/errors.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace c4star {

auto to_string(PointLabel p) -> std::string
{
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

auto Line::contains(PointLabel p) const -> bool
{
    return std::binary_search(members.begin(), members.end(), p);
}

auto is_quadrilateral(const IncidenceStructure & s, const std::array<int, 4> & pts) -> bool
{
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (pts[static_cast<std::size_t>(a)] == pts[static_cast<std::size_t>(b)])
                return false;
            for (int c = b + 1; c < 4; ++c) {
                auto common = s.rows[static_cast<std::size_t>(pts[static_cast<std::size_t>(a)])];
                common.intersect_with(s.rows[static_cast<std::size_t>(pts[static_cast<std::size_t>(b)])]);
                common.intersect_with(s.rows[static_cast<std::size_t>(pts[static_cast<std::size_t>(c)])]);
                if (common.any())
                    return false;
            }
        }
    return true;
}

auto check_axioms(const IncidenceStructure & s) -> AxiomReport
{
    AxiomReport report;

    for (int p = 0; p < s.point_count; ++p)
        for (int r = p + 1; r < s.point_count; ++r) {
            auto shared = s.rows[static_cast<std::size_t>(p)].intersection_count(s.rows[static_cast<std::size_t>(r)]);
            if (shared != 1) {
                report.failure = "axiom 1: points " + std::to_string(p) + " and " + std::to_string(r) + " share "
                    + std::to_string(shared) + " lines";
                report.counterexample = {p, r};
                return report;
            }
        }

    std::vector<DynamicBitset> columns(static_cast<std::size_t>(s.line_count), DynamicBitset(static_cast<std::size_t>(s.point_count)));
    for (int p = 0; p < s.point_count; ++p)
        s.rows[static_cast<std::size_t>(p)].for_each([&](std::size_t l) { columns[l].set(static_cast<std::size_t>(p)); });
    for (int l = 0; l < s.line_count; ++l)
        for (int m = l + 1; m < s.line_count; ++m) {
            auto shared = columns[static_cast<std::size_t>(l)].intersection_count(columns[static_cast<std::size_t>(m)]);
            if (shared != 1) {
                report.failure = "axiom 2: lines " + std::to_string(l) + " and " + std::to_string(m) + " meet in "
                    + std::to_string(shared) + " points";
                report.counterexample = {l, m};
                return report;
            }
        }

    // Axiom 3: grow a quadrilateral greedily, backtracking over choices.
    auto collinear = [&](int a, int b, int c) {
        auto common = s.rows[static_cast<std::size_t>(a)];
        common.intersect_with(s.rows[static_cast<std::size_t>(b)]);
        common.intersect_with(s.rows[static_cast<std::size_t>(c)]);
        return common.any();
    };
    int n = s.point_count;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (collinear(a, b, c))
                    continue;
                for (int d = c + 1; d < n; ++d)
                    if (! collinear(a, b, d) && ! collinear(a, c, d) && ! collinear(b, c, d)) {
                        report.quadrilateral = std::array<int, 4>{a, b, c, d};
                        report.ok = true;
                        return report;
                    }
            }

    report.failure = "axiom 3: no quadrilateral exists";
    return report;
}

auto IncidenceMatrix::to_ascii() const -> std::string
{
    std::ostringstream out;
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            if (c > 0)
                out << ' ';
            auto v = entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (r == c && absolute[static_cast<std::size_t>(r)])
                out << '!';
            else
                out << static_cast<int>(v);
        }
        out << '\n';
    }
    return out.str();
}

auto IncidenceMatrix::to_csv() const -> std::string
{
    std::ostringstream out;
    out << "point,line,absolute\n";
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
            if (entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])
                out << r << ',' << c << ',' << ((r == c && absolute[static_cast<std::size_t>(r)]) ? 1 : 0) << '\n';
    return out.str();
}

ProjectivePlane::ProjectivePlane(int q) :
    field_(q),
    q_(q)
{
    for (int x = 0; x <= q_; ++x)
        for (int y = 0; y < q_; ++y)
            points_.push_back({x, y});
    points_.push_back({q_, q_});

    auto n = points_.size();
    incidence_.point_count = static_cast<int>(n);
    incidence_.line_count = static_cast<int>(n);
    incidence_.rows.assign(n, DynamicBitset(n));
    for (std::size_t l = 0; l < n; ++l)
        for (auto p : members_of(points_[l]))
            incidence_.rows[static_cast<std::size_t>(index_of(p))].set(l);
}

auto ProjectivePlane::is_point(PointLabel p) const -> bool
{
    if (p.x < 0 || p.y < 0 || p.x > q_ || p.y > q_)
        return false;
    return p.y < q_ || p.x == q_;
}

auto ProjectivePlane::index_of(PointLabel p) const -> int
{
    if (! is_point(p))
        throw std::out_of_range("not a point of the plane of order " + std::to_string(q_) + ": " + to_string(p));
    if (p.y == q_)
        return q_ * q_ + q_;
    return p.x * q_ + p.y;
}

auto ProjectivePlane::members_of(PointLabel index) const -> std::vector<PointLabel>
{
    std::vector<PointLabel> out;
    if (index.x < q_) {
        auto x = element(index.x), y = element(index.y);
        for (auto k : field_.elements())
            out.push_back({k.id, field_.sub(field_.mul(k, x), y).id});
        out.push_back({q_, index.x});
    }
    else if (index.y < q_) {
        for (int y = 0; y < q_; ++y)
            out.push_back({index.y, y});
        out.push_back({q_, q_});
    }
    else {
        for (int y = 0; y < q_; ++y)
            out.push_back({q_, y});
        out.push_back({q_, q_});
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto ProjectivePlane::line(PointLabel index) const -> Line
{
    index_of(index);
    return Line{index, members_of(index)};
}

auto ProjectivePlane::lines() const -> std::vector<Line>
{
    std::vector<Line> out;
    for (auto p : points_)
        out.push_back(line(p));
    return out;
}

auto ProjectivePlane::incident(PointLabel p, PointLabel line_label) const -> bool
{
    return incidence_.incident(index_of(p), index_of(line_label));
}

auto ProjectivePlane::line_through(PointLabel p, PointLabel r) const -> Line
{
    index_of(p);
    index_of(r);
    if (p == r)
        throw SamePoint();
    if (r < p)
        std::swap(p, r);

    // After the swap an affine point always comes first.
    if (p.x < q_) {
        if (r.x < q_) {
            if (p.x == r.x)
                return line({q_, p.x});
            auto x1 = element(p.x), y1 = element(p.y), x2 = element(r.x), y2 = element(r.y);
            auto a = field_.div(field_.sub(y1, y2), field_.sub(x1, x2));
            auto b = field_.sub(field_.mul(a, x1), y1);
            return line({a.id, b.id});
        }
        if (r.y < q_) {
            auto z = element(r.y);
            auto b = field_.sub(field_.mul(element(p.x), z), element(p.y));
            return line({z.id, b.id});
        }
        return line({q_, p.x});
    }
    return line(infinity());
}

auto ProjectivePlane::meet(const Line & a, const Line & b) const -> PointLabel
{
    if (a.label == b.label)
        throw SameLine();
    // R lies on B_P and B_Q iff P and Q lie on B_R.
    return line_through(a.label, b.label).label;
}

auto ProjectivePlane::sigma(const Line & l) const -> PointLabel
{
    index_of(l.label);
    return l.label;
}

auto ProjectivePlane::absolute_points() const -> std::vector<PointLabel>
{
    std::vector<PointLabel> out;
    for (auto p : points_)
        if (is_absolute(p))
            out.push_back(p);
    return out;
}

auto ProjectivePlane::affine_restriction() const -> AffinePlane
{
    AffinePlane affine;
    auto at_infinity = line(infinity());
    for (auto p : points_)
        if (! at_infinity.contains(p))
            affine.points.push_back(p);

    auto restrict = [&](PointLabel index) {
        auto full = line(index);
        Line cut{index, {}};
        for (auto p : full.members)
            if (! at_infinity.contains(p))
                cut.members.push_back(p);
        return cut;
    };

    for (auto p : points_)
        if (p != infinity())
            affine.lines.push_back(restrict(p));

    for (int x = 0; x < q_; ++x) {
        std::vector<Line> cls;
        for (int y = 0; y < q_; ++y)
            cls.push_back(restrict({x, y}));
        affine.parallel_classes.push_back(std::move(cls));
    }
    std::vector<Line> columns;
    for (int z = 0; z < q_; ++z)
        columns.push_back(restrict({q_, z}));
    affine.parallel_classes.push_back(std::move(columns));
    return affine;
}

auto ProjectivePlane::incidence_matrix() const -> IncidenceMatrix
{
    IncidenceMatrix m;
    m.size = size();
    m.entries.assign(static_cast<std::size_t>(m.size), std::vector<std::uint8_t>(static_cast<std::size_t>(m.size), 0));
    m.absolute.assign(static_cast<std::size_t>(m.size), false);
    for (int r = 0; r < m.size; ++r) {
        for (int c = 0; c < m.size; ++c)
            m.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = incidence_.incident(r, c) ? 1 : 0;
        m.absolute[static_cast<std::size_t>(r)] = incidence_.incident(r, r);
    }
    return m;
}

} // namespace c4star
