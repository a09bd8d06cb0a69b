#pragma once

// Exact 2D predicates over rational points: orientation, segment
// intersection and transversal crossings between polylines.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "djm/rational.hpp"

namespace djm {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b)
    {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point operator-(const Point& a, const Point& b);
Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);

struct Segment {
    Point a;
    Point b;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

// Sign of det(q - p, r - p).
Orientation orient(const Point& p, const Point& q, const Point& r);

enum class IntersectionKind {
    None,
    // Interiors cross at exactly one point.
    Proper,
    // The segments meet in exactly one point and that point is an endpoint
    // of at least one of them (shared endpoints and T-contacts).
    Endpoint,
    // They share a piece of positive length.
    Overlap,
};

struct SegmentIntersection {
    IntersectionKind kind = IntersectionKind::None;
    std::optional<Point> point;  // set for Proper and Endpoint
};

SegmentIntersection segment_intersection(const Segment& s, const Segment& t);
// Same test on endpoint references, without building segments.
SegmentIntersection intersect(const Point& sa, const Point& sb, const Point& ta, const Point& tb);

// True when p lies on the closed segment ab.
bool on_segment(const Point& a, const Point& b, const Point& p);

// Angular order of direction vectors, counter-clockwise starting from the
// positive x axis. Zero vectors are not allowed.
bool angle_less(const Point& d1, const Point& d2);

// Counter-clockwise angular order of directions measured from `ref`
// (directions equal to `ref` come first).
bool angle_less_from(const Point& ref, const Point& d1, const Point& d2);

struct PolylineContacts {
    // Transversal crossings, excluding shared polyline endpoints; sorted, unique.
    std::vector<Point> crossings;
    // Points where the curves meet without crossing (tangential contacts).
    std::vector<Point> touchings;
    // An endpoint of one polyline lying on the other, not shared by both.
    std::vector<Point> through_endpoint;
    std::optional<Point> overlap;

    bool degenerate() const { return overlap.has_value() || !through_endpoint.empty(); }
    bool empty() const { return crossings.empty() && touchings.empty() && through_endpoint.empty() && !overlap; }
};

// Classifies every point shared by two polylines given as point chains.
PolylineContacts polyline_contacts(std::span<const Point> e, std::span<const Point> f);

// Transversal crossings of two polylines. Throws DegeneracyError when the
// curves overlap or one runs through an endpoint of the other.
std::vector<Point> polyline_crossings(std::span<const Point> e, std::span<const Point> f);
std::vector<Point> polyline_crossings(std::span<const Segment> e, std::span<const Segment> f);

// Position of a point lying on a chain, comparable along the chain direction.
struct ChainPosition {
    std::size_t segment = 0;
    Rational t;  // in [0, 1] along that segment

    friend std::strong_ordering operator<=>(const ChainPosition& a, const ChainPosition& b)
    {
        if (auto c = a.segment <=> b.segment; c != 0) return c;
        return a.t <=> b.t;
    }
    friend bool operator==(const ChainPosition&, const ChainPosition&) = default;
};

// Position of p along the chain; p must lie on it.
ChainPosition chain_position(std::span<const Point> chain, const Point& p);

}  // namespace djm
