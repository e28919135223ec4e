#include "kummer/geometry.hpp"

#include "kummer/integer.hpp"

namespace kummer::geometry {

namespace {

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational dist2(const Point& p, const Point& q) {
  const Rational dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void require_distinct_centers(const Circle& c1, const Circle& c2) {
  if (c1.center == c2.center) throw DegenerateConfiguration("concentric circles have no common line");
}

}  // namespace

Circle make_circle(Rational cx, Rational cy, Rational r_squared) {
  require(r_squared > 0, "circle needs a positive squared radius");
  return {{std::move(cx), std::move(cy)}, std::move(r_squared)};
}

Line make_line(const Rational& a, const Rational& b, const Rational& c) {
  require(a != 0 || b != 0, "line needs (a, b) != (0, 0)");
  const mpz_class den = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  Line l{a.get_num() * (den / a.get_den()), b.get_num() * (den / b.get_den()), c.get_num() * (den / c.get_den())};
  const mpz_class g = gcd(gcd(l.a, l.b), l.c);
  l.a /= g;
  l.b /= g;
  l.c /= g;
  if (l.a < 0 || (l.a == 0 && l.b < 0)) {
    l.a = -l.a;
    l.b = -l.b;
    l.c = -l.c;
  }
  return l;
}

std::string to_string(const Line& l) {
  return l.a.get_str() + "x + " + l.b.get_str() + "y = " + l.c.get_str();
}

Rational power_of_point(const Point& pt, const Circle& c) { return dist2(pt, c.center) - c.r_squared; }

Line radical_axis(const Circle& c1, const Circle& c2) {
  require_distinct_centers(c1, c2);
  // |p-c1|^2 - r1^2 = |p-c2|^2 - r2^2, expanded; the quadratic terms cancel.
  const Rational a = 2 * (c2.center.x - c1.center.x);
  const Rational b = 2 * (c2.center.y - c1.center.y);
  const Rational k1 = c1.center.x * c1.center.x + c1.center.y * c1.center.y - c1.r_squared;
  const Rational k2 = c2.center.x * c2.center.x + c2.center.y * c2.center.y - c2.r_squared;
  return make_line(a, b, k2 - k1);
}

std::optional<CommonChord> common_chord_line(const Circle& c1, const Circle& c2) {
  require_distinct_centers(c1, c2);
  const Rational dx = c2.center.x - c1.center.x, dy = c2.center.y - c1.center.y;
  const Rational d2 = dx * dx + dy * dy;
  const Rational along = (d2 + c1.r_squared - c2.r_squared) / (2 * d2);
  const Rational half = c1.r_squared - along * along * d2;
  if (half <= 0) return std::nullopt;
  const Point foot{c1.center.x + along * dx, c1.center.y + along * dy};
  // Perpendicular to the centre line through the chord midpoint.
  return CommonChord{make_line(dx, dy, dx * foot.x + dy * foot.y), foot, along, half};
}

Rational power_of_chord_endpoint(const CommonChord& chord, const Circle& c) {
  // foot - centre is parallel to the centre line, the offset to the endpoint
  // perpendicular to it, so the squared distance splits.
  return dist2(chord.foot, c.center) + chord.half_chord_sq - c.r_squared;
}

std::string to_string(ChordKind k) {
  switch (k) {
    case ChordKind::Real: return "real";
    case ChordKind::Ideal: return "ideal";
    case ChordKind::Tangent: return "tangent";
  }
  return "?";
}

ChordConfiguration chord_configuration(Rational a_axis, Rational b_axis, Rational x0) {
  require(a_axis > 0 && b_axis > 0, "ellipse axes must be positive");
  require(x0 != 0, "secant through the centre has no pole");
  ChordConfiguration cfg{a_axis, b_axis, x0, {}, {}, {}, {}, ChordKind::Real, 0};
  const Rational a2 = a_axis * a_axis, b2 = b_axis * b_axis, x2 = x0 * x0;
  cfg.A = {-a_axis, 0};
  cfg.B = {a_axis, 0};
  cfg.O = {x0, 0};
  cfg.O_prime = {a2 / x0, 0};
  if (x2 < a2) {
    cfg.kind = ChordKind::Real;
    cfg.half_chord_sq = b2 * (1 - x2 / a2);  // on the ellipse
  } else if (x2 > a2) {
    cfg.kind = ChordKind::Ideal;
    cfg.half_chord_sq = b2 * (x2 / a2 - 1);  // on the supplementary conic
  } else {
    cfg.kind = ChordKind::Tangent;
    cfg.half_chord_sq = 0;
  }
  ensure(cfg.O.y == 0 && cfg.O_prime.y == 0, "O and O' must lie on the diameter AB");
  return cfg;
}

bool verify_section_relation(const ChordConfiguration& cfg) {
  if (cfg.kind == ChordKind::Tangent) throw DegenerateConfiguration("tangent secant: O and O' coincide");
  const Rational oa = abs_q(cfg.O.x - cfg.A.x), ob = abs_q(cfg.O.x - cfg.B.x);
  const Rational opa = abs_q(cfg.O_prime.x - cfg.A.x), opb = abs_q(cfg.O_prime.x - cfg.B.x);
  return opa * ob == opb * oa;
}

bool verify_chord_power_relation(const ChordConfiguration& cfg) {
  const Rational kappa = (cfg.b_axis * cfg.b_axis) / (cfg.a_axis * cfg.a_axis);
  const Rational oa = abs_q(cfg.O.x - cfg.A.x), ob = abs_q(cfg.O.x - cfg.B.x);
  return cfg.half_chord_sq == kappa * oa * ob;
}

bool endpoints_on_carrier_conic(const ChordConfiguration& cfg) {
  const Rational u = cfg.x0 * cfg.x0 / (cfg.a_axis * cfg.a_axis);
  const Rational v = cfg.half_chord_sq / (cfg.b_axis * cfg.b_axis);
  switch (cfg.kind) {
    case ChordKind::Real: return u + v == 1;
    case ChordKind::Ideal: return u - v == 1;
    case ChordKind::Tangent: return u == 1 && v == 0;
  }
  return false;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const mpz_class num = parse_integer(s.substr(0, slash));
    const mpz_class den = parse_integer(s.substr(slash + 1));
    require(den != 0, "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    const std::string whole = s.substr(0, dot);
    require(!frac.empty() && frac.find_first_not_of("0123456789") == std::string::npos,
            "malformed rational '" + s + "'");
    const bool neg = !whole.empty() && whole[0] == '-';
    const mpz_class w = (whole.empty() || whole == "-" || whole == "+") ? mpz_class(0) : parse_integer(whole);
    const mpz_class scale = ipow(10, static_cast<unsigned long>(frac.size()));
    mpz_class num = abs(w) * scale + mpz_class(frac, 10);
    if (neg) num = -num;
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(s));
}

}  // namespace kummer::geometry
