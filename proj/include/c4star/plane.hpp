#pragma once

#include <c4star/bitset.hpp>
#include <c4star/gf.hpp>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace c4star {

/**
 * A point of the plane, stored as a pair of ordering keys. A coordinate
 * equal to q is the infinity marker, so the valid labels are
 * (F_q x F_q) u ({q} x F_q) u {(q,q)}. The default comparison is the
 * canonical point order.
 */
struct PointLabel
{
    int x = 0;
    int y = 0;

    auto operator<=>(const PointLabel &) const = default;
};

auto to_string(PointLabel p) -> std::string;

/// Line B_P, named by its indexing point P.
struct Line
{
    PointLabel label;
    std::vector<PointLabel> members; ///< canonical order

    auto contains(PointLabel p) const -> bool;
    auto operator==(const Line & other) const -> bool { return label == other.label; }
};

/// Bare point/line incidence: rows[p] has bit l set iff point p lies on line l.
struct IncidenceStructure
{
    int point_count = 0;
    int line_count = 0;
    std::vector<DynamicBitset> rows;

    auto incident(int point, int line) const -> bool { return rows[static_cast<std::size_t>(point)].test(static_cast<std::size_t>(line)); }
    auto flip(int point, int line) -> void { rows[static_cast<std::size_t>(point)].flip(static_cast<std::size_t>(line)); }
};

struct AxiomReport
{
    bool ok = false;
    /// Empty on success, otherwise names the axiom and the first counterexample.
    std::string failure;
    /// Indices of the offending points (axiom 1) or lines (axiom 2).
    std::vector<int> counterexample;
    /// The quadrilateral found for axiom 3, as point indices.
    std::optional<std::array<int, 4>> quadrilateral;
};

/// Exhaustively checks the three projective plane axioms.
auto check_axioms(const IncidenceStructure & s) -> AxiomReport;

/// True iff no three of the four points are collinear.
auto is_quadrilateral(const IncidenceStructure & s, const std::array<int, 4> & points) -> bool;

struct IncidenceMatrix
{
    int size = 0;
    std::vector<std::vector<std::uint8_t>> entries; ///< entries[point][line]
    std::vector<bool> absolute;                     ///< per point

    /// Space separated 0/1 rows; an absolute diagonal entry prints as '!'.
    auto to_ascii() const -> std::string;
    /// One "point,line,absolute" record per incidence, canonical indices.
    auto to_csv() const -> std::string;
};

struct AffinePlane
{
    std::vector<PointLabel> points;
    std::vector<Line> lines;
    std::vector<std::vector<Line>> parallel_classes;
};

/**
 * The projective plane of order q built on cartesian coordinates:
 *
 *   B_(x,y) = {(k, kx - y) : k in F_q} u {(q, x)}
 *   B_(q,z) = {z} x F_q u {(q,q)}
 *   B_(q,q) = {q} x F_q u {(q,q)}
 *
 * Lines are indexed by points, which makes P -> B_P a polarity.
 */
class ProjectivePlane
{
public:
    explicit ProjectivePlane(int q);

    auto field() const -> const FiniteField & { return field_; }
    auto order() const -> int { return q_; }
    /// q^2 + q + 1
    auto size() const -> int { return static_cast<int>(points_.size()); }

    auto points() const -> const std::vector<PointLabel> & { return points_; }
    auto is_point(PointLabel p) const -> bool;
    /// Position of p in the canonical order; throws std::out_of_range for a non-point.
    auto index_of(PointLabel p) const -> int;
    auto point(int index) const -> PointLabel { return points_.at(static_cast<std::size_t>(index)); }
    auto infinity() const -> PointLabel { return {q_, q_}; }

    auto line(PointLabel index) const -> Line;
    auto lines() const -> std::vector<Line>;
    /// P lies on B_L.
    auto incident(PointLabel p, PointLabel line_label) const -> bool;

    /// Unique line through two distinct points; throws SamePoint.
    auto line_through(PointLabel p, PointLabel q) const -> Line;
    /// Unique common point of two distinct lines; throws SameLine.
    auto meet(const Line & a, const Line & b) const -> PointLabel;

    /// The polarity: P -> B_P and B_P -> P.
    auto sigma(PointLabel p) const -> Line { return line(p); }
    auto sigma(const Line & l) const -> PointLabel;

    auto is_absolute(PointLabel p) const -> bool { return incident(p, p); }
    auto absolute_points() const -> std::vector<PointLabel>;

    auto affine_restriction() const -> AffinePlane;
    auto incidence_matrix() const -> IncidenceMatrix;
    auto incidence() const -> const IncidenceStructure & { return incidence_; }

private:
    auto element(int key) const -> FieldElement { return FieldElement{static_cast<std::uint16_t>(key)}; }
    auto members_of(PointLabel index) const -> std::vector<PointLabel>;

    FiniteField field_;
    int q_;
    std::vector<PointLabel> points_;
    IncidenceStructure incidence_;
};

inline auto build_plane(int q) -> ProjectivePlane { return ProjectivePlane(q); }

} // namespace c4star
