#pragma once

// Exact rational plane geometry for two constructions: the line of two
// circles (common chord when they meet, radical axis always), and the real or
// ideal chords of an ellipse cut by the secant family x = x0.

#include "kummer/errors.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace kummer::geometry {

using Rational = mpq_class;

// Concentric circles, tangent chords: the particular positions where the
// construction degenerates.
class DegenerateConfiguration : public InputError {
 public:
  using InputError::InputError;
};

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Circle {
  Point center;
  Rational r_squared;
};

Circle make_circle(Rational cx, Rational cy, Rational r_squared);

/// a*x + b*y = c with integer a, b, c of gcd 1 and the first nonzero of (a, b)
/// positive, so equal lines compare equal.
struct Line {
  mpz_class a, b, c;
  friend bool operator==(const Line&, const Line&) = default;
};

Line make_line(const Rational& a, const Rational& b, const Rational& c);
std::string to_string(const Line& l);

Rational power_of_point(const Point& pt, const Circle& c);

/// Locus of equal power. Throws DegenerateConfiguration for concentric circles.
Line radical_axis(const Circle& c1, const Circle& c2);

/// The two intersection points are foot +- sqrt(half_chord_sq) * n, n the unit
/// normal to the centre line; only their rational data is stored.
struct CommonChord {
  Line line;
  Point foot;              // midpoint of the chord, on the line of centres
  Rational along;          // foot = c1 + along * (c2 - c1)
  Rational half_chord_sq;  // > 0
};

/// Present only when the circles cross in two real points.
std::optional<CommonChord> common_chord_line(const Circle& c1, const Circle& c2);

/// Power of either chord endpoint w.r.t. c (zero on both circles).
Rational power_of_chord_endpoint(const CommonChord& chord, const Circle& c);

enum class ChordKind { Real, Ideal, Tangent };
std::string to_string(ChordKind k);

/// Ellipse x^2/a^2 + y^2/b^2 = 1 cut by the secant x = x0. A and B are the
/// ends of the diameter on the x-axis, O the foot of the secant and O' the
/// pole of the secant (where the tangents at its endpoints meet).
struct ChordConfiguration {
  Rational a_axis, b_axis, x0;
  Point A, B, O, O_prime;
  ChordKind kind;
  /// Squared half-length. For Ideal chords the endpoints (x0, +-sqrt) lie on
  /// the supplementary conic x^2/a^2 - y^2/b^2 = 1.
  Rational half_chord_sq;
  Point midpoint() const { return O; }
  Point direction() const { return {0, 1}; }
};

ChordConfiguration chord_configuration(Rational a_axis, Rational b_axis, Rational x0);

/// O'A * OB == O'B * OA. Throws DegenerateConfiguration for tangent chords.
bool verify_section_relation(const ChordConfiguration& cfg);
/// half_chord_sq == (b^2/a^2) * OA * OB.
bool verify_chord_power_relation(const ChordConfiguration& cfg);
/// Endpoint lies on the ellipse (Real/Tangent) or the supplementary conic (Ideal).
bool endpoints_on_carrier_conic(const ChordConfiguration& cfg);

Rational parse_rational(std::string_view text);

}  // namespace kummer::geometry
