#pragma once

#include <numbers>
#include <utility>

#include <Eigen/Dense>

namespace nuclearity::geometry {

inline constexpr double kPi = std::numbers::pi;

// Reduce an angle to (-pi, pi].
double reduce_angle(double theta);

// Circle angle <-> real line. The point at angle pi is the point at infinity.
double angle_to_line(double theta);
double line_to_angle(double x);

// Element of PSL(2,R); m and -m act identically. Kept at det = 1.
class MoebiusElement {
 public:
  MoebiusElement();
  explicit MoebiusElement(const Eigen::Matrix2d& m);
  MoebiusElement(double a, double b, double c, double d);

  static MoebiusElement translation(double t);            // x -> x + t
  static MoebiusElement conjugate_translation(double t);  // x -> x / (1 - t x)
  static MoebiusElement dilation(double s);               // x -> e^s x
  // Unique element sending the ccw-ordered angles p0, p1, p2 to 0, 1, infinity.
  static MoebiusElement three_point(double p0, double p1, double p2);

  const Eigen::Matrix2d& matrix() const { return m_; }
  double det() const { return m_.determinant(); }

  MoebiusElement operator*(const MoebiusElement& other) const;
  MoebiusElement inverse() const;

  // Line picture; +/-infinity both denote the point at infinity.
  double apply(double x) const;
  double apply_angle(double theta) const;

 private:
  Eigen::Matrix2d m_;
};

// Proper interval of the circle, from start angle a counterclockwise to end angle b.
class Interval {
 public:
  explicit Interval(double a, double b);

  // Open interval (x1, x2) of the line; x2 = +inf or x1 = -inf reaches the point at infinity.
  // x1 > x2 denotes the interval through infinity.
  static Interval from_line(double x1, double x2);
  static Interval upper_semicircle();  // (0, inf)
  static Interval right_semicircle();  // (-1, 1)

  double start() const { return a_; }
  double end() const { return b_; }
  double arc_length() const;

  std::pair<double, double> line_endpoints() const;
  bool contains_infinity() const;  // closure contains the point at infinity
  bool contains(double theta) const;

  Interval transformed(const MoebiusElement& g) const;

 private:
  double a_;
  double b_;
};

struct InnerDistances {
  double ell;
  double ell_prime;
};

struct TranslationDecomposition {
  double a;        // translation parameter
  double a_prime;  // conjugate-translation parameter
};

struct SymmetricSubinterval {
  Interval interval;
  double a;
  double a_prime;
};

bool is_compact_inclusion(const Interval& outer, const Interval& inner);

// g with g(I) = (0, inf); the image of the start point goes to 0.
MoebiusElement normalizing_map(const Interval& interval);

// g with g(outer) = (0, inf) and g(inner) invariant under x -> 1/x.
MoebiusElement symmetric_normalizing_map(const Interval& outer, const Interval& inner);

MoebiusElement dilation_flow(const Interval& interval, double s);

double inner_distance(const Interval& outer, const Interval& inner);
double second_inner_distance(const Interval& outer, const Interval& inner);
InnerDistances inner_distances(const Interval& outer, const Interval& inner);

// inner = tau'_{-a'} tau_a (0, inf) after the symmetric normalization.
TranslationDecomposition translation_decomposition(const Interval& outer, const Interval& inner);

SymmetricSubinterval symmetric_subinterval(double s);

}  // namespace nuclearity::geometry
