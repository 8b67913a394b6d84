#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitbox/poly.hpp"

namespace hitbox {

/// Affine point or the point at infinity.
struct CurvePoint {
    bool infinity = false;
    Rational x, y;

    static CurvePoint at_infinity() { return {true, {}, {}}; }
    static CurvePoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }

    std::string to_string() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    /// Infinity first, then by x and y.
    friend bool operator<(const CurvePoint& a, const CurvePoint& b);
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
class EllipticCurve {
  public:
    EllipticCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
    /// y^2 = x^3 + A x + B.
    static EllipticCurve short_form(const Rational& A, const Rational& B);

    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }
    const Rational& a3() const { return a3_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }

    Rational discriminant() const;
    bool contains(const CurvePoint& p) const;
    /// a1 = a2 = a3 = 0 with integral a4, a6.
    bool is_integral_short() const;
    std::string to_string() const;

  private:
    Rational a1_, a2_, a3_, a4_, a6_;
};

/// Torsion orders of points over Q never exceed this (Mazur).
constexpr int kMazurBound = 12;

CurvePoint ec_neg(const EllipticCurve& e, const CurvePoint& p);
/// Chord-tangent sum. DomainError if either point is off the curve.
CurvePoint ec_add(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint ec_mul(const EllipticCurve& e, long n, const CurvePoint& p);
/// Order of p if it is at most `bound`.
std::optional<int> ec_order(const EllipticCurve& e, const CurvePoint& p, int bound = kMazurBound);

/// All rational torsion points of an integral short model, sorted.
/// Candidates are integral points with y = 0 or y^2 dividing 4A^3 + 27B^2.
std::vector<CurvePoint> ec_torsion_lutz_nagell(const EllipticCurve& e);

/// Isomorphism from y^2 = c * g(x), g a monic cubic, onto an integral short
/// model: X = c x, Y = c y, W = X + shift, then (W, Y) -> (u^2 W, u^3 Y).
struct ScaledModel {
    Rational c;
    QPoly cubic;
    Rational shift;
    Integer u;
    EllipticCurve curve;

    bool on_source(const CurvePoint& p) const;
    CurvePoint forward(const CurvePoint& p) const;
    CurvePoint backward(const CurvePoint& p) const;
};

ScaledModel transform_scaled_model(const Rational& c, const QPoly& cubic);

}  // namespace hitbox
