#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitbox/poly.hpp"
#include "hitbox/ratfunc.hpp"

namespace hitbox {

/// The affine plane curve f(T, X) = 0.
class PlaneCurve {
  public:
    explicit PlaneCurve(BiPoly f);
    const BiPoly& equation() const { return f_; }
    bool contains(const Rational& t, const Rational& x) const { return eval2(f_, t, x).is_zero(); }

  private:
    BiPoly f_;
};

struct PlanePoint {
    Rational t, x;

    std::string to_string() const;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
    /// Sweep order on t, then ascending x.
    friend bool operator<(const PlanePoint& a, const PlanePoint& b);
};

/// A rational map V -> (t(V), x(V)).
struct Parametrization {
    QFrac t, x;
};

/// psi(v), or nullopt where a denominator vanishes.
std::optional<PlanePoint> eval_map(const Parametrization& psi, const Rational& v);

/// phi(t, x), or nullopt where the denominator vanishes.
std::optional<Rational> eval_map(const BiFrac& phi, const PlanePoint& p);

/// f(psi(V)) == 0 and phi(psi(V)) == V as rational functions of V.
bool verify_parametrization(const PlaneCurve& c, const Parametrization& psi, const BiFrac& phi);

/// All points with height(t) <= bound and height(x) <= bound, in sweep order.
/// DomainError when some f(t, X) vanishes identically.
std::vector<PlanePoint> bounded_point_search(const PlaneCurve& c, long height_bound);

/// Points of bounded height on the curve where num(phi) - value * den(phi)
/// vanishes, for any of the values. Points where both vanish belong to
/// every fiber.
std::vector<PlanePoint> pullback_fiber(const BiFrac& phi, const std::vector<Rational>& values, const PlaneCurve& c,
                                       long search_height);

struct CaseIdentity {
    int case_id;
    std::string claim;
    bool holds;
};

/// The four substitutions of the sextic Fermat example, each checked as an
/// exact identity of rational functions in T and X. S holds F1..F4.
std::vector<CaseIdentity> verify_case_identities(const std::vector<BiPoly>& S);

}  // namespace hitbox
