#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixture_io.hpp"

#include <c4star/errors.hpp>
#include <c4star/plane.hpp>

#include <set>

using namespace c4star;

namespace {

const std::vector<int> plane_orders{2, 3, 4, 5, 7, 8, 9};

// Direct evaluation of the line equations, independent of the stored incidence.
auto on_line(const FiniteField & f, PointLabel p, PointLabel l) -> bool
{
    int q = f.order();
    if (l.x < q) {
        if (p.x == q)
            return p.y == l.x;
        FieldElement k{static_cast<std::uint16_t>(p.x)};
        auto y = f.sub(f.mul(k, FieldElement{static_cast<std::uint16_t>(l.x)}), FieldElement{static_cast<std::uint16_t>(l.y)});
        return p.y == y.id;
    }
    if (l.y < q)
        return p.x == l.y || p == PointLabel{q, q};
    return p.x == q;
}

} // namespace

TEST_CASE("build_plane counts")
{
    for (int q : plane_orders) {
        CAPTURE(q);
        ProjectivePlane plane(q);
        CHECK(plane.size() == q * q + q + 1);
        std::vector<int> on_point(static_cast<std::size_t>(plane.size()), 0);
        for (const auto & l : plane.lines()) {
            CHECK(l.members.size() == static_cast<std::size_t>(q + 1));
            for (auto p : l.members)
                ++on_point[static_cast<std::size_t>(plane.index_of(p))];
        }
        for (int c : on_point)
            CHECK(c == q + 1);
    }
    CHECK_THROWS_AS(ProjectivePlane(6), NotPrimePower);
}

TEST_CASE("stored incidence matches the line equations")
{
    for (int q : {2, 3, 4, 5, 8, 9}) {
        ProjectivePlane plane(q);
        bool ok = true;
        for (auto p : plane.points())
            for (auto l : plane.points())
                ok = ok && plane.incident(p, l) == on_line(plane.field(), p, l);
        CHECK(ok);
    }
}

TEST_CASE("points are in canonical order")
{
    ProjectivePlane plane(3);
    const auto & pts = plane.points();
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.front() == PointLabel{0, 0});
    CHECK(pts[1] == PointLabel{0, 1});
    CHECK(pts[9] == PointLabel{3, 0});
    CHECK(pts.back() == PointLabel{3, 3});
    CHECK_THROWS_AS(plane.index_of({3, 4}), std::out_of_range);
    CHECK_THROWS_AS(plane.index_of({1, 3}), std::out_of_range);
}

TEST_CASE("line at infinity for q = 3")
{
    ProjectivePlane plane(3);
    auto l = plane.line({3, 3});
    CHECK(l.members == std::vector<PointLabel>{{3, 0}, {3, 1}, {3, 2}, {3, 3}});
}

TEST_CASE("line_through case analysis")
{
    ProjectivePlane plane(3);
    // Two affine points with equal x lie on B_(q,x).
    CHECK(plane.line_through({0, 0}, {0, 1}).label == PointLabel{3, 0});
    // Field element 1 is alpha^2, key 2 when q = 3.
    CHECK(plane.line_through({2, 2}, {3, 3}).label == PointLabel{3, 2});
    CHECK(plane.line_through({3, 0}, {3, 1}).label == PointLabel{3, 3});
    CHECK_THROWS_AS(plane.line_through({1, 1}, {1, 1}), SamePoint);

    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        ProjectivePlane pl(q);
        bool ok = true;
        for (auto p : pl.points())
            for (auto r : pl.points()) {
                if (p == r)
                    continue;
                auto l = pl.line_through(p, r);
                ok = ok && l.contains(p) && l.contains(r);
            }
        CHECK(ok);
    }
}

TEST_CASE("meet and duality round trip")
{
    ProjectivePlane plane(3);
    CHECK(plane.meet(plane.line({3, 0}), plane.line({3, 1})) == PointLabel{3, 3});
    CHECK_THROWS_AS(plane.meet(plane.line({0, 0}), plane.line({0, 0})), SameLine);

    for (int q : {4, 5}) {
        ProjectivePlane pl(q);
        auto lines = pl.lines();
        bool ok = true;
        for (std::size_t a = 0; a < lines.size(); ++a)
            for (std::size_t b = a + 1; b < lines.size(); ++b) {
                auto m = pl.meet(lines[a], lines[b]);
                int common = 0;
                for (auto p : lines[a].members)
                    common += lines[b].contains(p) ? 1 : 0;
                ok = ok && common == 1 && lines[a].contains(m) && lines[b].contains(m);
                // Both lines pass through m, and through one more of their own points each.
                auto pa = lines[a].members[0] == m ? lines[a].members[1] : lines[a].members[0];
                ok = ok && pl.line_through(m, pa) == lines[a];
            }
        CHECK(ok);
    }
}

TEST_CASE("axioms hold for the plane orders of interest")
{
    for (int q : plane_orders) {
        CAPTURE(q);
        auto report = check_axioms(ProjectivePlane(q).incidence());
        CHECK(report.ok);
        CHECK(report.failure.empty());
        REQUIRE(report.quadrilateral);
    }
}

TEST_CASE("fault injection is detected")
{
    ProjectivePlane plane(3);
    auto broken = plane.incidence();
    broken.flip(4, 7);
    auto report = check_axioms(broken);
    CHECK_FALSE(report.ok);
    CHECK(report.counterexample.size() == 2);
    CHECK(report.failure.find("axiom 1") == 0);

    auto removed = plane.incidence();
    removed.flip(0, 0);
    CHECK_FALSE(check_axioms(removed).ok);
}

TEST_CASE("the quadrilateral (0,0),(1,1),(q,0),(q,q)")
{
    ProjectivePlane plane(3);
    // 1 = alpha^2 has key 2.
    std::array<int, 4> pts{plane.index_of({0, 0}), plane.index_of({2, 2}), plane.index_of({3, 0}), plane.index_of({3, 3})};
    CHECK(is_quadrilateral(plane.incidence(), pts));
    std::array<int, 4> line_pts{plane.index_of({3, 0}), plane.index_of({3, 1}), plane.index_of({3, 2}), plane.index_of({0, 0})};
    CHECK_FALSE(is_quadrilateral(plane.incidence(), line_pts));
}

TEST_CASE("sigma is an incidence preserving involution")
{
    for (int q : plane_orders) {
        ProjectivePlane plane(q);
        bool ok = true;
        std::set<PointLabel> images;
        for (auto p : plane.points()) {
            ok = ok && plane.sigma(plane.sigma(p)) == p;
            images.insert(plane.sigma(p).label);
            for (auto r : plane.points())
                // P in sigma(R) iff R in sigma(P)
                ok = ok && plane.sigma(r).contains(p) == plane.sigma(p).contains(r);
        }
        CHECK(ok);
        CHECK(images.size() == plane.points().size());
    }
}

TEST_CASE("absolute points")
{
    {
        ProjectivePlane plane(3);
        // (0,0), (alpha,alpha), (alpha^2,alpha), (3,3)
        CHECK(plane.absolute_points() == std::vector<PointLabel>{{0, 0}, {1, 1}, {2, 1}, {3, 3}});
    }
    {
        ProjectivePlane plane(4);
        auto abs = plane.absolute_points();
        CHECK(abs == std::vector<PointLabel>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {4, 4}});
        CHECK(plane.line({4, 0}).members == abs);
    }
    for (int q : prime_powers_up_to(16)) {
        CAPTURE(q);
        ProjectivePlane plane(q);
        const auto & f = plane.field();
        auto abs = plane.absolute_points();
        CHECK(abs.size() == static_cast<std::size_t>(q + 1));
        // Closed form: x^2 = 2y for odd q, x = 0 for even q, plus (q,q).
        std::vector<PointLabel> expected;
        auto two = f.add(f.one(), f.one());
        for (auto x : f.elements())
            for (auto y : f.elements())
                if (f.mul(x, x) == f.mul(two, y))
                    expected.push_back({x.id, y.id});
        expected.push_back({q, q});
        CHECK(abs == expected);
    }
}

TEST_CASE("absolute points form an oval for odd q and a line for even q")
{
    for (int q : plane_orders) {
        CAPTURE(q);
        ProjectivePlane plane(q);
        auto abs = plane.absolute_points();
        if (q % 2 == 1) {
            bool no_three = true;
            for (std::size_t a = 0; a < abs.size(); ++a)
                for (std::size_t b = a + 1; b < abs.size(); ++b)
                    for (std::size_t c = b + 1; c < abs.size(); ++c)
                        no_three = no_three && ! plane.line_through(abs[a], abs[b]).contains(abs[c]);
            CHECK(no_three);
        }
        else {
            auto l = plane.line_through(abs[0], abs[1]);
            for (auto p : abs)
                CHECK(l.contains(p));
        }
    }
}

TEST_CASE("affine restriction")
{
    for (int q : {3, 4}) {
        CAPTURE(q);
        ProjectivePlane plane(q);
        auto aff = plane.affine_restriction();
        CHECK(aff.points.size() == static_cast<std::size_t>(q * q));
        CHECK(aff.lines.size() == static_cast<std::size_t>(q * q + q));
        for (const auto & l : aff.lines)
            CHECK(l.members.size() == static_cast<std::size_t>(q));
        REQUIRE(aff.parallel_classes.size() == static_cast<std::size_t>(q + 1));
        for (const auto & cls : aff.parallel_classes) {
            CHECK(cls.size() == static_cast<std::size_t>(q));
            std::multiset<PointLabel> covered;
            for (const auto & l : cls)
                covered.insert(l.members.begin(), l.members.end());
            CHECK(covered.size() == aff.points.size());
            CHECK(std::set<PointLabel>(covered.begin(), covered.end()) == std::set<PointLabel>(aff.points.begin(), aff.points.end()));
        }
        // The last class consists of the columns x = z.
        for (int z = 0; z < q; ++z)
            for (auto p : aff.parallel_classes.back()[static_cast<std::size_t>(z)].members)
                CHECK(p.x == z);
    }
}

TEST_CASE("incidence matrix")
{
    ProjectivePlane plane(3);
    auto m = plane.incidence_matrix();
    CHECK(m.to_ascii() == read_fixture("pi3_matrix.txt"));

    for (int q : {3, 5, 8}) {
        auto mm = ProjectivePlane(q).incidence_matrix();
        int flagged = 0;
        for (int r = 0; r < mm.size; ++r) {
            int row = 0;
            for (int c = 0; c < mm.size; ++c) {
                row += mm.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                CHECK(mm.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == mm.entries[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
            }
            CHECK(row == q + 1);
            flagged += mm.absolute[static_cast<std::size_t>(r)] ? 1 : 0;
        }
        CHECK(flagged == q + 1);
    }

    auto csv = m.to_csv();
    CHECK(csv.rfind("point,line,absolute\n0,0,1\n0,3,0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 13 * 4);
}
