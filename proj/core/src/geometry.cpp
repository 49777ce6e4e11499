#include "mgrecon/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace mgrecon {

bool Point::is_finite() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return std::isfinite(c); });
}

Point& Point::operator+=(const Point& other)
{
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Point& Point::operator-=(const Point& other)
{
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

Point& Point::operator*=(double s)
{
    for (double& c : coords_)
        c *= s;
    return *this;
}

void require_same_dim(const Point& p, const Point& q)
{
    if (p.dim() != q.dim())
        throw std::invalid_argument(
            fmt::format("dimension mismatch: {} vs {}", p.dim(), q.dim()));
}

double dot(const Vector& u, const Vector& v)
{
    require_same_dim(u, v);
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i)
        s += u[i] * v[i];
    return s;
}

double squared_norm(const Vector& v)
{
    double s = 0.0;
    for (double c : v.coords())
        s += c * c;
    return s;
}

double norm(const Vector& v) { return std::sqrt(squared_norm(v)); }

double squared_distance(const Point& p, const Point& q)
{
    require_same_dim(p, q);
    double s = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

double euclidean_distance(const Point& p, const Point& q) { return std::sqrt(squared_distance(p, q)); }

Ball min_enclosing_ball_3(const Point& p, const Point& q, const Point& r)
{
    require_same_dim(p, q);
    require_same_dim(p, r);

    // Longest side first: if its diametral ball holds the third point the
    // triangle is right, obtuse or degenerate and that ball is optimal.
    const std::array<const Point*, 3> pts{&p, &q, &r};
    const std::array<double, 3> side{squared_distance(q, r), squared_distance(p, r), squared_distance(p, q)};
    const auto far = static_cast<std::size_t>(std::max_element(side.begin(), side.end()) - side.begin());
    const Point& u = *pts[(far + 1) % 3];
    const Point& v = *pts[(far + 2) % 3];
    const Point& w = *pts[far];

    Ball diametral{(u + v) * 0.5, 0.5 * std::sqrt(side[far])};
    const double scale = std::max(1.0, diametral.radius);
    if (euclidean_distance(diametral.center, w) <= diametral.radius + 1e-12 * scale)
        return diametral;

    // Acute triangle: circumscribed circle in the plane of the three points.
    const Vector a = p - r;
    const Vector b = q - r;
    const double aa = dot(a, a);
    const double ab = dot(a, b);
    const double bb = dot(b, b);
    const double det = aa * bb - ab * ab;
    if (det <= 0.0)
        return diametral;
    const double alpha = bb * (aa - ab) / (2.0 * det);
    const double beta = aa * (bb - ab) / (2.0 * det);
    Point center = r + alpha * a + beta * b;
    const double radius = std::max({euclidean_distance(center, p), euclidean_distance(center, q),
                                    euclidean_distance(center, r)});
    return Ball{std::move(center), radius};
}

std::optional<Interval> segment_ball_intersection(const Segment& s, const Ball& b, double slack)
{
    require_same_dim(s.a, s.b);
    require_same_dim(s.a, b.center);

    const double reach = b.radius + slack;
    const Vector d = s.b - s.a;
    const Vector f = s.a - b.center;
    const double qa = dot(d, d);
    const double qb = 2.0 * dot(d, f);
    const double qc = dot(f, f) - reach * reach;

    if (qa == 0.0) {
        if (qc <= 0.0)
            return Interval{0.0, 1.0};
        return std::nullopt;
    }
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0)
        return std::nullopt;
    const double root = std::sqrt(disc);
    // Cancellation-free form of the two roots.
    const double qq = -0.5 * (qb + std::copysign(root, qb));
    double t0 = qq / qa;
    double t1 = (qq != 0.0) ? qc / qq : t0;
    if (t0 > t1)
        std::swap(t0, t1);
    if (t0 > 1.0 || t1 < 0.0)
        return std::nullopt;
    return Interval{std::max(t0, 0.0), std::min(t1, 1.0)};
}

double point_segment_distance(const Point& p, const Segment& s)
{
    const Vector d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0)
        return euclidean_distance(p, s.a);
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return euclidean_distance(p, s.a + t * d);
}

double segment_distance(const Segment& s1, const Segment& s2)
{
    require_same_dim(s1.a, s2.a);
    const Vector d1 = s1.b - s1.a;
    const Vector d2 = s2.b - s2.a;
    const Vector r = s1.a - s2.a;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);

    double s = 0.0;
    double t = 0.0;
    if (a == 0.0 && e == 0.0)
        return euclidean_distance(s1.a, s2.a);
    if (a == 0.0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e == 0.0) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            if (denom > 1e-14 * a * e)
                s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return euclidean_distance(s1.a + s * d1, s2.a + t * d2);
}

SegmentRelation segment_contact(const Segment& s1, const Segment& s2)
{
    if (segment_distance(s1, s2) > kTolerance)
        return SegmentRelation::Disjoint;

    const auto same = [](const Point& x, const Point& y) { return euclidean_distance(x, y) <= kTolerance; };
    const std::array<std::pair<const Point*, const Point*>, 2> ends1{{{&s1.a, &s1.b}, {&s1.b, &s1.a}}};
    const std::array<std::pair<const Point*, const Point*>, 2> ends2{{{&s2.a, &s2.b}, {&s2.b, &s2.a}}};
    for (const auto& [shared1, other1] : ends1) {
        for (const auto& [shared2, other2] : ends2) {
            if (!same(*shared1, *shared2))
                continue;
            // Overlap beyond the shared point means the two segments run
            // along the same ray, so one far end lies on the other segment.
            const Segment rest1{*shared1, *other1};
            const Segment rest2{*shared2, *other2};
            if (point_segment_distance(*other1, rest2) <= kTolerance ||
                point_segment_distance(*other2, rest1) <= kTolerance)
                return SegmentRelation::Intersecting;
            return SegmentRelation::SharedEndpoint;
        }
    }
    return SegmentRelation::Intersecting;
}

SegmentRelation segments_intersect(const Segment& s1, const Segment& s2)
{
    for (const Point* p : {&s1.a, &s1.b, &s2.a, &s2.b})
        if (p->dim() != 2)
            throw std::invalid_argument(fmt::format("segments_intersect requires d = 2, got {}", p->dim()));
    return segment_contact(s1, s2);
}

double angle_between(const Vector& u, const Vector& v)
{
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("angle_between: zero vector");
    const double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

double orient2d(const Point& a, const Point& b, const Point& c)
{
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

bool point_in_polygon(const Point& p, std::span<const Point> polygon)
{
    bool inside = false;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = polygon[i];
        const Point& b = polygon[j];
        if ((a[1] > p[1]) != (b[1] > p[1])) {
            const double x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
            if (p[0] < x)
                inside = !inside;
        }
    }
    return inside;
}

}  // namespace mgrecon
