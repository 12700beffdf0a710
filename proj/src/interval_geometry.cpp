#include "nuclearity/interval_geometry.hpp"

#include <cmath>
#include <limits>

#include "nuclearity/error.hpp"

namespace nuclearity::geometry {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInclusionTolerance = 1e-13;

// [v(u), v(w)] for v(theta) = (sin(theta/2), cos(theta/2)).
double bracket(double u, double w) { return std::sin(0.5 * (u - w)); }

// Counterclockwise offset of theta from base, in [0, 2pi).
double ccw_offset(double base, double theta) {
  double d = std::fmod(theta - base, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  if (d >= kTwoPi) d -= kTwoPi;
  return d;
}

// Position of inner = (z1, z2) after sending w1 -> 0, z1 -> 1, w2 -> infinity:
// returns x2 - 1 where z2 -> x2.
double normalized_excess(const Interval& outer, const Interval& inner) {
  const double w1 = outer.start();
  const double w2 = outer.end();
  const double z1 = inner.start();
  const double z2 = inner.end();
  return bracket(z2, z1) * bracket(w1, w2) / (bracket(z2, w2) * bracket(z1, w1));
}

void require_compact(const Interval& outer, const Interval& inner) {
  if (!is_compact_inclusion(outer, inner)) {
    throw Error(ErrorKind::NotCompactInclusion, "closure of the inner interval is not inside the outer interval");
  }
}

}  // namespace

double reduce_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double angle_to_line(double theta) {
  const double r = reduce_angle(theta);
  if (r == kPi) return kInf;
  return std::tan(0.5 * r);
}

double line_to_angle(double x) {
  if (std::isinf(x)) return kPi;
  return 2.0 * std::atan(x);
}

MoebiusElement::MoebiusElement() : m_(Eigen::Matrix2d::Identity()) {}

MoebiusElement::MoebiusElement(const Eigen::Matrix2d& m) {
  const double det = m.determinant();
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw Error(ErrorKind::InvalidInput, "Moebius matrix must have positive finite determinant");
  }
  m_ = m / std::sqrt(det);
}

MoebiusElement::MoebiusElement(double a, double b, double c, double d)
    : MoebiusElement((Eigen::Matrix2d() << a, b, c, d).finished()) {}

MoebiusElement MoebiusElement::translation(double t) { return MoebiusElement(1.0, t, 0.0, 1.0); }

MoebiusElement MoebiusElement::conjugate_translation(double t) { return MoebiusElement(1.0, 0.0, -t, 1.0); }

MoebiusElement MoebiusElement::dilation(double s) {
  return MoebiusElement(std::exp(0.5 * s), 0.0, 0.0, std::exp(-0.5 * s));
}

MoebiusElement MoebiusElement::three_point(double p0, double p1, double p2) {
  p0 = reduce_angle(p0);
  p1 = reduce_angle(p1);
  p2 = reduce_angle(p2);
  const double c1 = bracket(p1, p2);
  const double c0 = bracket(p1, p0);
  Eigen::Matrix2d m;
  m << c1 * std::cos(0.5 * p0), -c1 * std::sin(0.5 * p0), c0 * std::cos(0.5 * p2), -c0 * std::sin(0.5 * p2);
  if (!(m.determinant() > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "three_point requires distinct counterclockwise-ordered points");
  }
  return MoebiusElement(m);
}

MoebiusElement MoebiusElement::operator*(const MoebiusElement& other) const {
  return MoebiusElement(Eigen::Matrix2d(m_ * other.m_));
}

MoebiusElement MoebiusElement::inverse() const {
  Eigen::Matrix2d inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return MoebiusElement(inv);
}

double MoebiusElement::apply(double x) const {
  if (std::isinf(x)) {
    if (m_(1, 0) == 0.0) return kInf;
    return m_(0, 0) / m_(1, 0);
  }
  const double den = m_(1, 0) * x + m_(1, 1);
  if (den == 0.0) return kInf;
  return (m_(0, 0) * x + m_(0, 1)) / den;
}

double MoebiusElement::apply_angle(double theta) const {
  const Eigen::Vector2d v(std::sin(0.5 * theta), std::cos(0.5 * theta));
  const Eigen::Vector2d w = m_ * v;
  return reduce_angle(2.0 * std::atan2(w(0), w(1)));
}

Interval::Interval(double a, double b) : a_(reduce_angle(a)), b_(reduce_angle(b)) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidInterval, "interval endpoints must be finite angles");
  }
  if (a_ == b_) throw Error(ErrorKind::InvalidInterval, "interval endpoints coincide");
}

Interval Interval::from_line(double x1, double x2) {
  if (std::isnan(x1) || std::isnan(x2)) throw Error(ErrorKind::InvalidInterval, "NaN endpoint");
  if (x1 == kInf) x1 = -kInf;
  if (x2 == -kInf) x2 = kInf;
  return Interval(line_to_angle(x1), line_to_angle(x2));
}

Interval Interval::upper_semicircle() { return Interval(0.0, kPi); }

Interval Interval::right_semicircle() { return Interval(-0.5 * kPi, 0.5 * kPi); }

double Interval::arc_length() const {
  double d = b_ - a_;
  if (d <= 0.0) d += kTwoPi;
  return d;
}

std::pair<double, double> Interval::line_endpoints() const {
  const double x1 = a_ == kPi ? -kInf : angle_to_line(a_);
  return {x1, angle_to_line(b_)};
}

bool Interval::contains(double theta) const {
  const double off = ccw_offset(a_, reduce_angle(theta));
  return off > 0.0 && off < arc_length();
}

bool Interval::contains_infinity() const { return a_ == kPi || b_ == kPi || contains(kPi); }

Interval Interval::transformed(const MoebiusElement& g) const {
  return Interval(g.apply_angle(a_), g.apply_angle(b_));
}

bool is_compact_inclusion(const Interval& outer, const Interval& inner) {
  const double oa = ccw_offset(outer.start(), inner.start());
  const double ob = ccw_offset(outer.start(), inner.end());
  return oa > kInclusionTolerance && oa < ob && ob < outer.arc_length() - kInclusionTolerance;
}

MoebiusElement normalizing_map(const Interval& interval) {
  const double mid = interval.start() + 0.5 * interval.arc_length();
  return MoebiusElement::three_point(interval.start(), mid, interval.end());
}

MoebiusElement symmetric_normalizing_map(const Interval& outer, const Interval& inner) {
  require_compact(outer, inner);
  const double x2 = 1.0 + normalized_excess(outer, inner);
  const MoebiusElement g0 = MoebiusElement::three_point(outer.start(), inner.start(), outer.end());
  return MoebiusElement::dilation(-0.5 * std::log(x2)) * g0;
}

MoebiusElement dilation_flow(const Interval& interval, double s) {
  const MoebiusElement g = normalizing_map(interval);
  return g.inverse() * MoebiusElement::dilation(s) * g;
}

InnerDistances inner_distances(const Interval& outer, const Interval& inner) {
  require_compact(outer, inner);
  // After normalization the outer interval is (0, inf) and the inner one is (r, 1/r).
  const double q = normalized_excess(outer, inner);
  const double sx = std::sqrt(1.0 + q);
  const double r = 1.0 / sx;
  const double one_minus_r = q / (sx * (sx + 1.0));
  // Dilation parameter of (-1, 1) carrying 0 to r.
  const double ell = std::log1p(2.0 * r / one_minus_r);
  const TranslationDecomposition dec{sx / q, r};
  return {ell, std::sqrt(dec.a * dec.a_prime)};
}

double inner_distance(const Interval& outer, const Interval& inner) { return inner_distances(outer, inner).ell; }

double second_inner_distance(const Interval& outer, const Interval& inner) {
  return inner_distances(outer, inner).ell_prime;
}

TranslationDecomposition translation_decomposition(const Interval& outer, const Interval& inner) {
  require_compact(outer, inner);
  const double q = normalized_excess(outer, inner);
  const double sx = std::sqrt(1.0 + q);
  return {sx / q, 1.0 / sx};
}

SymmetricSubinterval symmetric_subinterval(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorKind::NonPositiveParameter, "symmetric_subinterval requires finite s > 0");
  }
  const double t = std::tanh(0.5 * s);
  return {Interval::from_line(t, 1.0 / t), t, 0.5 * std::sinh(s)};
}

}  // namespace nuclearity::geometry
