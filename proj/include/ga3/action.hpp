#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ga3/bundle.hpp"
#include "ga3/groebner.hpp"
#include "ga3/polynomial.hpp"

namespace ga3 {

// Parametric family of Cox-coordinate endomorphisms sigma_(u,v,w): the
// concrete representation of a candidate Ga^3-structure on `bundle`.
struct ActionCandidate {
  BundleType bundle;
  std::array<Polynomial, kNumCoxVars> images;  // of t1,t2,x1,x2,x3

  // Pullback along the family: p with each Cox variable replaced by its image.
  Polynomial pullback(const Polynomial& p) const {
    std::map<Var, Polynomial> m;
    for (int i = 0; i < kNumCoxVars; ++i) m.emplace(var_at(i), images[i]);
    return p.substitute(m);
  }
};

// Rational point of the Cox cover; the default base point (1,0,0,0,1) lies in
// the open orbit of the standard action.
struct BasePoint {
  std::array<Rational, kNumCoxVars> values;

  static BasePoint standard() {
    return {{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}};
  }
};

// The translation action extending the chart translation (t2,x1,x2) ->
// (t2+u, x1+v, x2+w) weight-homogeneously:
//   t1 -> t1, t2 -> t2 + u*t1,
//   x1 -> x1 + v*t1^d1*x3, x2 -> x2 + w*t1^d2*x3, x3 -> x3.
inline ActionCandidate standard_action(const BundleType& B) {
  ActionCandidate a;
  a.bundle = B;
  auto poly_var = [](Var v) { return Polynomial::variable(v); };
  a.images[0] = poly_var(Var::t1);
  a.images[1] = poly_var(Var::t2) + poly_var(Var::u) * poly_var(Var::t1);
  a.images[2] = poly_var(Var::x1) + poly_var(Var::v) *
                                        poly_var(Var::t1).pow(B.d1) *
                                        poly_var(Var::x3);
  a.images[3] = poly_var(Var::x2) + poly_var(Var::w) *
                                        poly_var(Var::t1).pow(B.d2) *
                                        poly_var(Var::x3);
  a.images[4] = poly_var(Var::x3);
  return a;
}

struct CheckResult {
  enum class Status { pass, fail, inconclusive };
  Status status = Status::pass;
  std::string detail;  // witness for fail, reason for inconclusive

  static CheckResult pass() { return {Status::pass, ""}; }
  static CheckResult fail(std::string witness) {
    return {Status::fail, std::move(witness)};
  }
  static CheckResult inconclusive(std::string reason) {
    return {Status::inconclusive, std::move(reason)};
  }
  bool ok() const { return status == Status::pass; }
};

// Verification report for one action candidate. Valid iff every check passes,
// the orbit rank is 3 and both -K coefficients are >= 2.
struct Certificate {
  CheckResult identity;
  CheckResult equivariance;
  CheckResult group_law;
  CheckResult irrelevant_locus;
  std::vector<std::pair<std::string, CheckResult>> boundary_stability;
  CheckResult orbit_rank_check;
  int orbit_rank_value = 0;
  CheckResult ht_check;
  std::optional<std::pair<long long, long long>> ht_values;

  bool valid() const {
    if (!identity.ok() || !equivariance.ok() || !group_law.ok() ||
        !irrelevant_locus.ok() || !orbit_rank_check.ok() || !ht_check.ok())
      return false;
    for (const auto& [name, r] : boundary_stability)
      if (!r.ok()) return false;
    return true;
  }

  // Ordered list of named checks, first failing one is the rejecting check.
  std::vector<std::pair<std::string, const CheckResult*>> ordered() const {
    std::vector<std::pair<std::string, const CheckResult*>> out;
    out.emplace_back("identity", &identity);
    out.emplace_back("equivariance", &equivariance);
    out.emplace_back("group_law", &group_law);
    out.emplace_back("irrelevant_locus", &irrelevant_locus);
    for (const auto& [name, r] : boundary_stability)
      out.emplace_back("boundary_stability[" + name + "]", &r);
    out.emplace_back("orbit_rank", &orbit_rank_check);
    out.emplace_back("ht_coefficients", &ht_check);
    return out;
  }

  std::string first_failing() const {
    for (const auto& [name, r] : ordered())
      if (!r->ok()) return name;
    return "";
  }
};

// sigma_(0,0,0) must be the identity tuple.
inline CheckResult verify_identity(const ActionCandidate& A) {
  std::map<Var, Polynomial> zero = {
      {Var::u, Polynomial()}, {Var::v, Polynomial()}, {Var::w, Polynomial()}};
  for (int i = 0; i < kNumCoxVars; ++i) {
    Polynomial at0 = A.images[i].substitute(zero);
    if (at0 != Polynomial::variable(var_at(i)))
      return CheckResult::fail(std::string(name_of(var_at(i))) + " -> " +
                               at0.str());
  }
  return CheckResult::pass();
}

// Each image must be bihomogeneous of the bidegree of its variable, so the
// family descends to the quotient.
inline CheckResult verify_equivariance(const ActionCandidate& A) {
  WeightTable w = A.bundle.weights();
  for (int i = 0; i < kNumCoxVars; ++i) {
    BidegreeResult d = bidegree_of(A.images[i], w);
    Bidegree want = w[i];
    if (d.kind == BidegreeResult::Kind::heterogeneous ||
        (d.homogeneous() && d.degree != want))
      return CheckResult::fail(std::string(name_of(var_at(i))) + " -> " +
                               A.images[i].str());
  }
  return CheckResult::pass();
}

namespace detail {

// sigma with parameters renamed to their primed copies.
inline ActionCandidate primed_copy(const ActionCandidate& A) {
  std::map<Var, Polynomial> rename = {
      {Var::u, Polynomial::variable(Var::up)},
      {Var::v, Polynomial::variable(Var::vp)},
      {Var::w, Polynomial::variable(Var::wp)}};
  ActionCandidate r = A;
  for (auto& img : r.images) img = img.substitute(rename);
  return r;
}

}  // namespace detail

// sigma_(u',v',w') o sigma_(u,v,w) = sigma_(u+u', v+v', w+w') as polynomial
// identities in all eleven variables.
inline CheckResult verify_group_law(const ActionCandidate& A) {
  ActionCandidate primed = detail::primed_copy(A);
  std::map<Var, Polynomial> shift = {
      {Var::u, Polynomial::variable(Var::u) + Polynomial::variable(Var::up)},
      {Var::v, Polynomial::variable(Var::v) + Polynomial::variable(Var::vp)},
      {Var::w, Polynomial::variable(Var::w) + Polynomial::variable(Var::wp)}};
  for (int i = 0; i < kNumCoxVars; ++i) {
    Polynomial composed = A.pullback(primed.images[i]);
    Polynomial target = A.images[i].substitute(shift);
    if (composed != target)
      return CheckResult::fail(std::string(name_of(var_at(i))) +
                               ": composition gives " + composed.str() +
                               ", group law needs " + target.str());
  }
  return CheckResult::pass();
}

// The family must avoid the irrelevant locus {t=0} u {x=0}: the t-pair lies
// in the ideal of the t-images, and each xi times some monomial in t1,t2 lies
// in the ideal of the x-images.
inline CheckResult verify_irrelevant_locus(const ActionCandidate& A,
                                           const GroebnerLimits& limits = {}) {
  std::vector<Polynomial> t_ideal = {A.images[0], A.images[1]};
  bool inconclusive = false;
  std::string reason;
  for (Var tv : {Var::t1, Var::t2}) {
    MembershipResult r = ideal_member(Polynomial::variable(tv), t_ideal, limits);
    if (r.status == MembershipResult::Status::resource_limit)
      return CheckResult::inconclusive("resource limit in t-ideal membership");
    if (!r.is_member())
      return CheckResult::fail(std::string(name_of(tv)) +
                               " not proven in ideal of t-images");
  }

  // Each xi must be cleared by a pure power of t1 and a pure power of t2:
  // at a point where the x-images vanish, one of t1, t2 is nonzero, so all
  // three xi vanish there, which lands in the removed x-locus.
  std::vector<Polynomial> x_ideal = {A.images[2], A.images[3], A.images[4]};
  int cap = std::max({A.bundle.d1, 2});
  for (Var xv : {Var::x1, Var::x2, Var::x3}) {
    for (Var tv : {Var::t1, Var::t2}) {
      bool covered = false;
      for (int k = 0; k <= cap && !covered; ++k) {
        Monomial m = Monomial::of(tv, k) * Monomial::of(xv);
        MembershipResult r =
            ideal_member(Polynomial::term(m, Rational(1)), x_ideal, limits);
        if (r.status == MembershipResult::Status::resource_limit) {
          inconclusive = true;
          reason = "resource limit in x-ideal membership";
        } else if (r.is_member()) {
          covered = true;
        }
      }
      if (!covered) {
        if (inconclusive) return CheckResult::inconclusive(reason);
        return CheckResult::inconclusive(
            std::string(name_of(xv)) + ": no multiple by a power of " +
            std::string(name_of(tv)) + " proven in ideal of x-images");
      }
    }
  }
  return CheckResult::pass();
}

// Each boundary component must be fixed on the nose: sigma^*(p) = p.
inline CheckResult verify_boundary_component(const ActionCandidate& A,
                                             const Polynomial& p) {
  BidegreeResult d = bidegree_of(p, A.bundle.weights());
  if (!d.homogeneous())
    return CheckResult::fail("boundary component is not bihomogeneous: " +
                             p.str());
  Polynomial img = A.pullback(p);
  if (img != p)
    return CheckResult::fail(p.str() + " -> " + img.str());
  return CheckResult::pass();
}

// Rank of the Jacobian of the chart image of the base point with respect to
// (u,v,w) at the origin. Chart coordinates come from clearing the torus
// scaling: (T2/T1, X1/(T1^d1*X3), X2/(T1^d2*X3)).
inline int orbit_rank(const ActionCandidate& A, const BasePoint& p0) {
  if (p0.values[0] == 0 || p0.values[4] == 0)
    throw std::invalid_argument("base point outside the chart t1,x3 != 0");

  std::map<Var, Polynomial> point;
  for (int i = 0; i < kNumCoxVars; ++i)
    point.emplace(var_at(i), Polynomial::constant(p0.values[i]));

  // images of the base point as polynomials in u,v,w only
  std::array<Polynomial, kNumCoxVars> img;
  for (int i = 0; i < kNumCoxVars; ++i) img[i] = A.images[i].substitute(point);

  std::map<Var, Polynomial> zero = {
      {Var::u, Polynomial()}, {Var::v, Polynomial()}, {Var::w, Polynomial()}};
  auto value_at_zero = [&](const Polynomial& p) {
    Polynomial c = p.substitute(zero);
    return c.is_zero() ? Rational(0) : c.coeff(Monomial::one());
  };

  // chart coordinates N/D with N, D polynomial in the parameters
  const Polynomial& T1 = img[0];
  struct Coord {
    Polynomial num, den;
  };
  std::array<Coord, 3> coords;
  coords[0] = {img[1], T1};
  coords[1] = {img[2], T1.pow(A.bundle.d1) * img[4]};
  coords[2] = {img[3], T1.pow(A.bundle.d2) * img[4]};

  std::array<Var, 3> params = {Var::u, Var::v, Var::w};
  std::array<std::array<Rational, 3>, 3> jac;
  for (int i = 0; i < 3; ++i) {
    Rational n0 = value_at_zero(coords[i].num);
    Rational d0 = value_at_zero(coords[i].den);
    if (d0 == 0)
      throw std::invalid_argument("base point image leaves the chart");
    for (int j = 0; j < 3; ++j) {
      Rational dn = value_at_zero(coords[i].num.differentiate(params[j]));
      Rational dd = value_at_zero(coords[i].den.differentiate(params[j]));
      jac[i][j] = (dn * d0 - n0 * dd) / (d0 * d0);
    }
  }

  // exact Gaussian elimination
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int row = rank; row < 3; ++row) {
      if (jac[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(jac[pivot], jac[rank]);
    for (int row = rank + 1; row < 3; ++row) {
      if (jac[row][col] == 0) continue;
      Rational f = jac[row][col] / jac[rank][col];
      for (int k = col; k < 3; ++k) jac[row][k] -= f * jac[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Solve -K = a1*D1 + a2*D2 over the integers in the rank-2 lattice.
// Returns nullopt when no integral solution exists; throws when D1, D2 are
// linearly dependent.
inline std::optional<std::pair<long long, long long>> ht_coefficients(
    const BundleType& B, const DivisorClass& D1, const DivisorClass& D2) {
  long long det = D1.a * D2.b - D1.b * D2.a;
  if (det == 0)
    throw std::invalid_argument("ht_coefficients: classes are dependent");
  DivisorClass mk = canonical_class(B);
  // Cramer's rule
  long long n1 = mk.a * D2.b - mk.b * D2.a;
  long long n2 = D1.a * mk.b - D1.b * mk.a;
  if (n1 % det != 0 || n2 % det != 0) return std::nullopt;
  return std::make_pair(n1 / det, n2 / det);
}

// Full verifier: runs every check and aggregates the certificate. The
// Hassett-Tschinkel test uses the classes of the boundary components.
inline Certificate verify_all(const ActionCandidate& A,
                              const std::vector<Polynomial>& boundary,
                              const BasePoint& p0,
                              const GroebnerLimits& limits = {}) {
  Certificate c;
  c.identity = verify_identity(A);
  c.equivariance = verify_equivariance(A);
  c.group_law = verify_group_law(A);
  c.irrelevant_locus = verify_irrelevant_locus(A, limits);
  for (const Polynomial& p : boundary)
    c.boundary_stability.emplace_back(p.str(), verify_boundary_component(A, p));

  try {
    c.orbit_rank_value = orbit_rank(A, p0);
    c.orbit_rank_check =
        c.orbit_rank_value == 3
            ? CheckResult::pass()
            : CheckResult::fail("orbit rank " +
                                std::to_string(c.orbit_rank_value) + " < 3");
  } catch (const std::invalid_argument& e) {
    c.orbit_rank_check = CheckResult::fail(e.what());
  }

  if (boundary.size() == 2) {
    try {
      DivisorClass d1 = class_of_divisor(A.bundle, boundary[0]);
      DivisorClass d2 = class_of_divisor(A.bundle, boundary[1]);
      c.ht_values = ht_coefficients(A.bundle, d1, d2);
      if (!c.ht_values) {
        c.ht_check = CheckResult::fail("-K is not an integral combination");
      } else if (c.ht_values->first < 2 || c.ht_values->second < 2) {
        c.ht_check = CheckResult::fail(
            "coefficients (" + std::to_string(c.ht_values->first) + ", " +
            std::to_string(c.ht_values->second) + ") not both >= 2");
      } else {
        c.ht_check = CheckResult::pass();
      }
    } catch (const std::invalid_argument& e) {
      c.ht_check = CheckResult::fail(e.what());
    }
  } else {
    c.ht_check = CheckResult::fail("boundary must have two components");
  }
  return c;
}

}  // namespace ga3
