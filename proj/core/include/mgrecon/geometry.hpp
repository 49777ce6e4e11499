#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace mgrecon {

/// Absolute slack used by every closed-ball predicate: "within r" means
/// distance <= r + kTolerance.
inline constexpr double kTolerance = 1e-9;

/**
 * A point (or displacement vector) in R^d.
 *
 * The dimension is carried at runtime; every binary operation checks that
 * both operands agree and throws std::invalid_argument otherwise.
 */
class Point {
public:
    Point() = default;
    explicit Point(std::size_t dim) : coords_(dim, 0.0) {}
    Point(std::initializer_list<double> coords) : coords_(coords) {}
    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }

    bool is_finite() const;

    Point& operator+=(const Point& other);
    Point& operator-=(const Point& other);
    Point& operator*=(double s);

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(Point a, double s) { return a *= s; }
    friend Point operator*(double s, Point a) { return a *= s; }
    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

using Vector = Point;

struct Segment {
    Point a;
    Point b;
};

struct Ball {
    Point center;
    double radius = 0.0;
};

/// Closed parameter interval [lo, hi] along a segment.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

enum class SegmentRelation {
    Disjoint,
    SharedEndpoint,  ///< meet only at one common endpoint
    Intersecting,    ///< any other contact: proper crossing, touching, overlap
};

void require_same_dim(const Point& p, const Point& q);

double dot(const Vector& u, const Vector& v);
double squared_norm(const Vector& v);
double norm(const Vector& v);

double euclidean_distance(const Point& p, const Point& q);
double squared_distance(const Point& p, const Point& q);

/// Smallest ball containing p, q and r. Collinear and coincident inputs are
/// handled (the ball then has the longest pairwise distance as diameter).
Ball min_enclosing_ball_3(const Point& p, const Point& q, const Point& r);

/// Parameter interval of s intersected with the closed ball of radius
/// b.radius + slack, clipped to [0,1]. Returns nullopt when empty.
std::optional<Interval> segment_ball_intersection(const Segment& s, const Ball& b,
                                                  double slack = kTolerance);

/// Relation of two closed planar segments. Throws for d != 2.
SegmentRelation segments_intersect(const Segment& s1, const Segment& s2);

/// Same classification as segments_intersect, valid in any dimension.
SegmentRelation segment_contact(const Segment& s1, const Segment& s2);

/// Distance between two closed segments in R^d.
double segment_distance(const Segment& s1, const Segment& s2);

/// Distance from p to the closed segment s.
double point_segment_distance(const Point& p, const Segment& s);

/// Angle in [0, pi] between two nonzero vectors.
double angle_between(const Vector& u, const Vector& v);

/// Signed area of the planar triangle (a, b, c), positive when counter-clockwise.
double orient2d(const Point& a, const Point& b, const Point& c);

/// Even-odd point-in-polygon test for a closed planar polygon.
bool point_in_polygon(const Point& p, std::span<const Point> polygon);

}  // namespace mgrecon
