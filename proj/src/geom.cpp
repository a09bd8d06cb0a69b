#include "djm/geom.hpp"

#include <algorithm>
#include <ostream>

#include "djm/errors.hpp"

namespace djm {

namespace {

using i128 = __int128;

constexpr std::int64_t kOrientLimit = std::int64_t{1} << 62;
constexpr std::int64_t kPointLimit = std::int64_t{1} << 31;

bool small_int(const Rational& r, std::int64_t limit)
{
    return r.is_small() && r.small_den() == 1 && r.small_num() < limit && r.small_num() > -limit;
}

template <std::size_t N>
bool small_ints(const Point* const (&pts)[N], std::int64_t limit)
{
    for (const Point* p : pts)
        if (!small_int(p->x, limit) || !small_int(p->y, limit)) return false;
    return true;
}

Orientation from_sign(int s)
{
    return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

struct Box {
    const Rational* xlo;
    const Rational* xhi;
    const Rational* ylo;
    const Rational* yhi;
};

Box box_of(std::span<const Point> chain)
{
    Box b{&chain[0].x, &chain[0].x, &chain[0].y, &chain[0].y};
    for (const Point& p : chain.subspan(1)) {
        if (p.x < *b.xlo) b.xlo = &p.x;
        if (p.x > *b.xhi) b.xhi = &p.x;
        if (p.y < *b.ylo) b.ylo = &p.y;
        if (p.y > *b.yhi) b.yhi = &p.y;
    }
    return b;
}

bool boxes_meet(const Box& a, const Box& b)
{
    return !(*a.xhi < *b.xlo || *b.xhi < *a.xlo || *a.yhi < *b.ylo || *b.yhi < *a.ylo);
}

bool segment_boxes_meet(const Point& a0, const Point& a1, const Point& b0, const Point& b1)
{
    const auto& [axlo, axhi] = std::minmax(a0.x, a1.x);
    const auto& [bxlo, bxhi] = std::minmax(b0.x, b1.x);
    if (axhi < bxlo || bxhi < axlo) return false;
    const auto& [aylo, ayhi] = std::minmax(a0.y, a1.y);
    const auto& [bylo, byhi] = std::minmax(b0.y, b1.y);
    return !(ayhi < bylo || byhi < aylo);
}

// +1 strictly increasing x, -1 strictly decreasing, 0 otherwise.
int x_monotone_direction(std::span<const Point> chain)
{
    int dir = chain[1].x > chain[0].x ? 1 : (chain[1].x < chain[0].x ? -1 : 0);
    if (dir == 0) return 0;
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
        auto c = chain[k + 1].x <=> chain[k].x;
        if ((dir > 0 && c <= 0) || (dir < 0 && c >= 0)) return 0;
    }
    return dir;
}

Point proper_point(const Point& sa, const Point& sb, const Point& ta, const Point& tb)
{
    if (small_ints<4>({&sa, &sb, &ta, &tb}, kPointLimit)) {
        i128 ax = sa.x.small_num(), ay = sa.y.small_num();
        i128 d1x = sb.x.small_num() - ax, d1y = sb.y.small_num() - ay;
        i128 d2x = tb.x.small_num() - ta.x.small_num(), d2y = tb.y.small_num() - ta.y.small_num();
        i128 wx = ta.x.small_num() - ax, wy = ta.y.small_num() - ay;
        i128 den = d1x * d2y - d1y * d2x;
        i128 num = wx * d2y - wy * d2x;
        return {Rational::from_i128(ax * den + d1x * num, den), Rational::from_i128(ay * den + d1y * num, den)};
    }
    Point d1 = sb - sa;
    Point d2 = tb - ta;
    Rational u = cross(ta - sa, d2) / cross(d1, d2);
    return {sa.x + d1.x * u, sa.y + d1.y * u};
}

// The two chain neighbours of a point lying in the relative interior of the chain.
std::optional<std::pair<Point, Point>> local_rays(std::span<const Point> chain, const Point& p)
{
    for (std::size_t k = 1; k + 1 < chain.size(); ++k)
        if (chain[k] == p) return std::pair{chain[k - 1], chain[k + 1]};
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (p != chain[k] && p != chain[k + 1] && on_segment(chain[k], chain[k + 1], p))
            return std::pair{chain[k], chain[k + 1]};
    return std::nullopt;
}

bool strictly_inside_ccw(const Point& from, const Point& to, const Point& d) { return angle_less_from(from, d, to); }

}  // namespace

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << '(' << p.x << ", " << p.y << ')'; }

Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Orientation orient(const Point& p, const Point& q, const Point& r)
{
    if (small_ints<3>({&p, &q, &r}, kOrientLimit)) {
        i128 px = p.x.small_num(), py = p.y.small_num();
        i128 det = (i128(q.x.small_num()) - px) * (i128(r.y.small_num()) - py) -
                   (i128(q.y.small_num()) - py) * (i128(r.x.small_num()) - px);
        return from_sign((det > 0) - (det < 0));
    }
    return from_sign(cross(q - p, r - p).sign());
}

bool on_segment(const Point& a, const Point& b, const Point& p)
{
    if (orient(a, b, p) != Orientation::Collinear) return false;
    const auto& [xlo, xhi] = std::minmax(a.x, b.x);
    const auto& [ylo, yhi] = std::minmax(a.y, b.y);
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

SegmentIntersection segment_intersection(const Segment& s, const Segment& t)
{
    return intersect(s.a, s.b, t.a, t.b);
}

SegmentIntersection intersect(const Point& sa, const Point& sb, const Point& ta, const Point& tb)
{
    const bool fast = small_ints<4>({&sa, &sb, &ta, &tb}, kOrientLimit);
    auto orient_of = [fast](const Point& p, const Point& q, const Point& r) {
        if (!fast) return orient(p, q, r);
        i128 px = p.x.small_num(), py = p.y.small_num();
        i128 det = (i128(q.x.small_num()) - px) * (i128(r.y.small_num()) - py) -
                   (i128(q.y.small_num()) - py) * (i128(r.x.small_num()) - px);
        return from_sign((det > 0) - (det < 0));
    };
    Orientation o1 = orient_of(sa, sb, ta);
    Orientation o2 = orient_of(sa, sb, tb);
    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
        // Project on the axis along which s is not degenerate.
        bool use_x = sa.x != sb.x;
        auto key = [use_x](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
        const auto& [slo, shi] = std::minmax(key(sa), key(sb));
        const auto& [tlo, thi] = std::minmax(key(ta), key(tb));
        const Rational& lo = std::max(slo, tlo);
        const Rational& hi = std::min(shi, thi);
        if (lo > hi) return {};
        const Point* at_lo = nullptr;
        for (const Point* p : {&sa, &sb, &ta, &tb})
            if (key(*p) == lo) {
                at_lo = p;
                break;
            }
        if (lo == hi) return {IntersectionKind::Endpoint, *at_lo};
        return {IntersectionKind::Overlap, *at_lo};
    }
    if (o1 == o2) return {};
    Orientation o3 = orient_of(ta, tb, sa);
    Orientation o4 = orient_of(ta, tb, sb);
    if (o3 == o4) return {};
    if (o1 == Orientation::Collinear) return {IntersectionKind::Endpoint, ta};
    if (o2 == Orientation::Collinear) return {IntersectionKind::Endpoint, tb};
    if (o3 == Orientation::Collinear) return {IntersectionKind::Endpoint, sa};
    if (o4 == Orientation::Collinear) return {IntersectionKind::Endpoint, sb};
    return {IntersectionKind::Proper, proper_point(sa, sb, ta, tb)};
}

bool angle_less(const Point& d1, const Point& d2)
{
    auto half = [](const Point& d) { return d.y.sign() < 0 || (d.y.sign() == 0 && d.x.sign() < 0); };
    bool h1 = half(d1);
    bool h2 = half(d2);
    if (h1 != h2) return h2;
    return cross(d1, d2).sign() > 0;
}

bool angle_less_from(const Point& ref, const Point& d1, const Point& d2)
{
    Point r1{dot(ref, d1), cross(ref, d1)};
    Point r2{dot(ref, d2), cross(ref, d2)};
    return angle_less(r1, r2);
}

PolylineContacts polyline_contacts(std::span<const Point> e, std::span<const Point> f)
{
    PolylineContacts out;
    if (e.size() < 2 || f.size() < 2) return out;
    if (e.size() == 2 && f.size() == 2) {
        if (!segment_boxes_meet(e[0], e[1], f[0], f[1])) return out;
        SegmentIntersection r = intersect(e[0], e[1], f[0], f[1]);
        if (r.kind == IntersectionKind::Proper) {
            out.crossings.push_back(std::move(*r.point));
        } else if (r.kind == IntersectionKind::Overlap) {
            out.overlap = std::move(r.point);
        } else if (r.kind == IntersectionKind::Endpoint) {
            bool e_end = *r.point == e[0] || *r.point == e[1];
            bool f_end = *r.point == f[0] || *r.point == f[1];
            if (!(e_end && f_end)) out.through_endpoint.push_back(std::move(*r.point));
        }
        return out;
    }
    if (!boxes_meet(box_of(e), box_of(f))) return out;

    std::vector<Point> contacts;
    auto test = [&](std::size_t i, std::size_t j) {
        if (!segment_boxes_meet(e[i], e[i + 1], f[j], f[j + 1])) return;
        SegmentIntersection r = intersect(e[i], e[i + 1], f[j], f[j + 1]);
        switch (r.kind) {
        case IntersectionKind::None:
            break;
        case IntersectionKind::Proper:
            out.crossings.push_back(std::move(*r.point));
            break;
        case IntersectionKind::Endpoint:
            contacts.push_back(std::move(*r.point));
            break;
        case IntersectionKind::Overlap:
            if (!out.overlap) out.overlap = std::move(r.point);
            break;
        }
    };

    std::size_t ne = e.size() - 1;
    std::size_t nf = f.size() - 1;
    int de = x_monotone_direction(e);
    int df = x_monotone_direction(f);
    if (de != 0 && df != 0) {
        // Merge the two x-sorted segment lists; only x-overlapping pairs are tested.
        auto eidx = [&](std::size_t k) { return de > 0 ? k : ne - 1 - k; };
        auto fidx = [&](std::size_t k) { return df > 0 ? k : nf - 1 - k; };
        auto lo = [](std::span<const Point> c, std::size_t s) -> const Rational& { return std::min(c[s].x, c[s + 1].x); };
        auto hi = [](std::span<const Point> c, std::size_t s) -> const Rational& { return std::max(c[s].x, c[s + 1].x); };
        std::size_t i = 0, j = 0;
        while (i < ne && j < nf) {
            std::size_t si = eidx(i), sj = fidx(j);
            if (hi(e, si) < lo(f, sj)) {
                ++i;
                continue;
            }
            if (hi(f, sj) < lo(e, si)) {
                ++j;
                continue;
            }
            test(si, sj);
            auto c = hi(e, si) <=> hi(f, sj);
            if (c <= 0) ++i;
            if (c >= 0) ++j;
        }
    } else {
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < nf; ++j) test(i, j);
    }

    if (out.overlap) return out;

    std::sort(contacts.begin(), contacts.end());
    contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
    for (Point& p : contacts) {
        bool e_end = p == e.front() || p == e.back();
        bool f_end = p == f.front() || p == f.back();
        if (e_end && f_end) continue;  // shared endpoint
        if (e_end || f_end) {
            out.through_endpoint.push_back(std::move(p));
            continue;
        }
        auto re = local_rays(e, p);
        auto rf = local_rays(f, p);
        if (!re || !rf) {
            out.touchings.push_back(std::move(p));
            continue;
        }
        Point a1 = re->first - p, a2 = re->second - p;
        Point b1 = rf->first - p, b2 = rf->second - p;
        bool separated = strictly_inside_ccw(a1, a2, b1) != strictly_inside_ccw(a1, a2, b2);
        (separated ? out.crossings : out.touchings).push_back(std::move(p));
    }

    std::sort(out.crossings.begin(), out.crossings.end());
    out.crossings.erase(std::unique(out.crossings.begin(), out.crossings.end()), out.crossings.end());
    return out;
}

std::vector<Point> polyline_crossings(std::span<const Point> e, std::span<const Point> f)
{
    PolylineContacts c = polyline_contacts(e, f);
    if (c.overlap) throw DegeneracyError("polylines overlap near " + c.overlap->x.to_string() + "," + c.overlap->y.to_string());
    if (!c.through_endpoint.empty())
        throw DegeneracyError("polyline passes through an endpoint of the other at " + c.through_endpoint[0].x.to_string() +
                              "," + c.through_endpoint[0].y.to_string());
    return std::move(c.crossings);
}

namespace {

std::vector<Point> chain_of(std::span<const Segment> segs)
{
    if (segs.empty()) throw DegeneracyError("empty polyline");
    std::vector<Point> chain{segs[0].a};
    for (const Segment& s : segs) {
        if (s.a != chain.back()) throw DegeneracyError("polyline segments are not connected");
        chain.push_back(s.b);
    }
    return chain;
}

}  // namespace

std::vector<Point> polyline_crossings(std::span<const Segment> e, std::span<const Segment> f)
{
    std::vector<Point> ce = chain_of(e);
    std::vector<Point> cf = chain_of(f);
    return polyline_crossings(std::span<const Point>(ce), std::span<const Point>(cf));
}

ChainPosition chain_position(std::span<const Point> chain, const Point& p)
{
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (!on_segment(chain[k], chain[k + 1], p)) continue;
        Point d = chain[k + 1] - chain[k];
        return {k, dot(p - chain[k], d) / dot(d, d)};
    }
    throw DegeneracyError("point is not on the chain");
}

}  // namespace djm
