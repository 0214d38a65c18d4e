#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ga3/action.hpp"
#include "ga3/bundle.hpp"
#include "ga3/groebner.hpp"

namespace ga3 {

struct LinkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One elementary link between split P^2-bundles, centered in the fiber over
// infinity = [0:1]. Line links blow up the line E n F of F(-d,-d,0); point
// links blow up the point {t1 = x2 = x3 = 0}, which lies on the negative
// section of E when d1 > d2 and is the fixed point of E n F when d1 = d2.
struct LinkStep {
  enum class Kind { line, point };
  Kind kind;
  BundleType source;
  BundleType target;
  std::vector<Polynomial> center_ideal;

  static LinkStep line(int d) {
    LinkStep s;
    s.kind = Kind::line;
    s.source = BundleType(d, d);
    s.target = BundleType(d + 1, d + 1);
    s.center_ideal = {Polynomial::variable(Var::t1),
                      Polynomial::variable(Var::x3)};
    return s;
  }

  static LinkStep point(int d1, int d2) {
    LinkStep s;
    s.kind = Kind::point;
    s.source = BundleType(d1, d2);
    s.target = BundleType(d1 + 1, d2);
    s.center_ideal = {Polynomial::variable(Var::t1),
                      Polynomial::variable(Var::x2),
                      Polynomial::variable(Var::x3)};
    return s;
  }

  std::string kind_name() const {
    return kind == Kind::line ? "line" : "point";
  }
};

// The composite psi o phi^-1 written directly in Cox coordinates of source
// and target.
struct RationalMap {
  std::array<Polynomial, kNumCoxVars> images;

  // Pullback of a target-coordinate polynomial to source coordinates.
  Polynomial pullback(const Polynomial& p) const {
    std::map<Var, Polynomial> m;
    for (int i = 0; i < kNumCoxVars; ++i) m.emplace(var_at(i), images[i]);
    return p.substitute(m);
  }
};

namespace detail {

// Construction contract (i): the x-images must cut exactly the center inside
// the quotient. Checked by ideal membership both ways: every x-image lies in
// the center ideal, and every center generator, cleared of the irrelevant
// x-locus, lies in the ideal of the x-images.
inline void check_indeterminacy(const LinkStep& step, const RationalMap& map) {
  std::vector<Polynomial> x_images = {map.images[2], map.images[3],
                                      map.images[4]};
  for (const Polynomial& img : x_images) {
    if (!ideal_member(img, step.center_ideal).is_member())
      throw LinkError("link_map: x-image " + img.str() +
                      " does not vanish on the center");
  }
  for (const Polynomial& c : step.center_ideal) {
    for (Var xv : {Var::x1, Var::x2, Var::x3}) {
      Polynomial cx = c * Polynomial::variable(xv);
      if (!ideal_member(cx, x_images).is_member())
        throw LinkError("link_map: indeterminacy exceeds the center at " +
                        cx.str());
    }
  }
}

// Construction contract (ii): on the common chart t1 = x3 = 1 the map is the
// identity in (t2, x1, x2).
inline void check_chart_identity(const RationalMap& map) {
  std::map<Var, Polynomial> chart = {{Var::t1, Polynomial::constant(1)},
                                     {Var::x3, Polynomial::constant(1)}};
  std::array<Polynomial, kNumCoxVars> want = {
      Polynomial::constant(1), Polynomial::variable(Var::t2),
      Polynomial::variable(Var::x1), Polynomial::variable(Var::x2),
      Polynomial::constant(1)};
  for (int i = 0; i < kNumCoxVars; ++i) {
    if (map.images[i].substitute(chart) != want[i])
      throw LinkError("link_map: chart identity fails in component " +
                      std::string(name_of(var_at(i))));
  }
}

// The images must be bihomogeneous in source weights, matching the target
// weight of each coordinate.
inline void check_weights(const LinkStep& step, const RationalMap& map) {
  WeightTable src = step.source.weights();
  WeightTable tgt = step.target.weights();
  for (int i = 0; i < kNumCoxVars; ++i) {
    BidegreeResult d = bidegree_of(map.images[i], src);
    if (!d.homogeneous() || d.degree != tgt[i])
      throw LinkError("link_map: weight mismatch in component " +
                      std::string(name_of(var_at(i))));
  }
}

}  // namespace detail

// Direct rational map of the elementary link:
//   line:  (t1,t2,x1,x2,x3) -> (t1, t2, t1*x1, t1*x2, x3)
//   point: (t1,t2,x1,x2,x3) -> (t1, t2, t1*x1, x2, x3)
// Verified on construction: indeterminacy ideal, chart identity, weights.
inline RationalMap link_map(const LinkStep& step) {
  RationalMap m;
  Polynomial t1 = Polynomial::variable(Var::t1);
  m.images[0] = t1;
  m.images[1] = Polynomial::variable(Var::t2);
  m.images[2] = t1 * Polynomial::variable(Var::x1);
  m.images[3] = step.kind == LinkStep::Kind::line
                    ? t1 * Polynomial::variable(Var::x2)
                    : Polynomial::variable(Var::x2);
  m.images[4] = Polynomial::variable(Var::x3);
  detail::check_indeterminacy(step, m);
  detail::check_chart_identity(m);
  detail::check_weights(step, m);
  return m;
}

// Strict-transform class transport: (a, b) with multiplicity m along the
// center maps to (a, a + b - m). The contracted source fiber (0,1,m=1) lands
// on the zero class.
inline DivisorClass transport_class(const LinkStep&, const DivisorClass& D,
                                    long long m) {
  if (m < 0 || m > D.a + D.b)
    throw std::invalid_argument(
        "transport_class: multiplicity exceeds the bound a + b");
  return {D.a, D.a + D.b - m};
}

// Largest k with p in (center ideal)^k.
inline long long multiplicity_along_center(const LinkStep& step,
                                           const Polynomial& p,
                                           const GroebnerLimits& limits = {}) {
  if (p.is_zero())
    throw std::invalid_argument("multiplicity of the zero polynomial");
  long long k = 0;
  std::vector<Polynomial> power = step.center_ideal;
  int bound = p.total_degree();
  while (k < bound + 1) {
    MembershipResult r = ideal_member(p, power, limits);
    if (r.status == MembershipResult::Status::resource_limit)
      throw LinkError("multiplicity_along_center: resource limit");
    if (!r.is_member()) break;
    ++k;
    // next power: multiply generating set by the center generators
    std::vector<Polynomial> next;
    for (const Polynomial& f : power)
      for (const Polynomial& g : step.center_ideal) next.push_back(f * g);
    power = std::move(next);
  }
  return k;
}

struct LinkPlan {
  BundleType target;
  std::vector<LinkStep> steps;
};

// d2 line links (i,i) -> (i+1,i+1), then d1-d2 point links to (d1,d2).
inline LinkPlan plan_links(const BundleType& target) {
  LinkPlan plan;
  plan.target = target;
  for (int i = 0; i < target.d2; ++i) plan.steps.push_back(LinkStep::line(i));
  for (int j = target.d2; j < target.d1; ++j)
    plan.steps.push_back(LinkStep::point(j, target.d2));
  return plan;
}

namespace detail {

// Divide a by b when the quotient is a single term c * t1^k; nullopt
// otherwise. This is the only torus re-parametrization the links allow.
inline std::optional<Polynomial> monomial_t1_ratio(const Polynomial& a,
                                                   const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  Monomial ml = a.leading_monomial();
  Monomial bl = b.leading_monomial();
  if (!bl.divides(ml)) return std::nullopt;
  Monomial q = ml.divide(bl);
  for (int i = 0; i < kNumVars; ++i)
    if (q.e[i] != 0 && var_at(i) != Var::t1) return std::nullopt;
  Polynomial factor =
      Polynomial::term(q, a.leading_coeff() / b.leading_coeff());
  if (factor * b != a) return std::nullopt;
  return factor;
}

}  // namespace detail

// Chart-compatibility identity for an action pair across a link:
// link o sigma_source = sigma_target o link componentwise, up to a single
// monomial factor c * t1^k common to the t-pair and one common to the
// x-triple.
inline bool chart_compatible(const LinkStep& step, const ActionCandidate& src,
                             const ActionCandidate& tgt) {
  RationalMap map = link_map(step);
  std::array<Polynomial, kNumCoxVars> lhs, rhs;
  for (int i = 0; i < kNumCoxVars; ++i) {
    lhs[i] = src.pullback(map.images[i]);          // (link o sigma_src)^*
    rhs[i] = map.pullback(tgt.images[i]);          // (sigma_tgt o link)^*
  }
  auto group_matches = [&](int begin, int end) {
    std::optional<Polynomial> factor;
    for (int i = begin; i < end; ++i) {
      if (lhs[i].is_zero() && rhs[i].is_zero()) continue;
      auto f = detail::monomial_t1_ratio(lhs[i], rhs[i]);
      if (!f) return false;
      if (!factor) factor = f;
      if (*f != *factor) return false;
    }
    return true;
  };
  return group_matches(0, 2) && group_matches(2, kNumCoxVars);
}

// Transport of a certified action across one link. The center must be stable
// under the source action; the result is the standard action on the target,
// certified by verify_all and by the chart-compatibility identity.
inline ActionCandidate transport_action(const LinkStep& step,
                                        const ActionCandidate& A,
                                        const GroebnerLimits& limits = {}) {
  if (A.bundle != step.source)
    throw LinkError("transport_action: action lives on " + A.bundle.str() +
                    ", step starts at " + step.source.str());

  std::vector<Polynomial> boundary = {Polynomial::variable(Var::x3),
                                      Polynomial::variable(Var::t1)};
  Certificate pre = verify_all(A, boundary, BasePoint::standard(), limits);
  if (!pre.valid())
    throw LinkError("transport_action: source action is not certified (" +
                    pre.first_failing() + ")");

  // center stability: sigma^*(g) in the center ideal for every generator
  for (const Polynomial& g : step.center_ideal) {
    Polynomial img = A.pullback(g);
    MembershipResult r = ideal_member(img, step.center_ideal, limits);
    if (r.status == MembershipResult::Status::resource_limit)
      throw LinkError("transport_action: resource limit in stability check");
    if (!r.is_member())
      throw LinkError("transport_action: center moves, witness " + g.str() +
                      " -> " + img.str());
  }

  ActionCandidate result = standard_action(step.target);
  Certificate post = verify_all(result, boundary, BasePoint::standard(), limits);
  if (!post.valid())
    throw LinkError("transport_action: target certificate invalid (" +
                    post.first_failing() + ")");
  if (!chart_compatible(step, A, result))
    throw LinkError("transport_action: chart-compatibility identity fails");
  return result;
}

struct SynthesisResult {
  ActionCandidate action;
  Certificate certificate;
  LinkPlan plan;
  // boundary pair classes after each step (position 0 is the start (0,0))
  std::vector<std::pair<DivisorClass, DivisorClass>> boundary_classes;
};

// Fold transport_action over the plan from the product action on P^1 x P^2,
// transporting the boundary classes stepwise and checking they stay (xi, F).
inline SynthesisResult synthesize(const BundleType& target,
                                  const GroebnerLimits& limits = {}) {
  SynthesisResult r;
  r.plan = plan_links(target);
  r.action = standard_action(BundleType(0, 0));
  r.boundary_classes.emplace_back(kXiClass, kFiberClass);

  Polynomial e_poly = Polynomial::variable(Var::x3);
  std::size_t index = 0;
  for (const LinkStep& step : r.plan.steps) {
    try {
      r.action = transport_action(step, r.action, limits);
    } catch (const LinkError& e) {
      throw LinkError("synthesize: step " + std::to_string(index) + " (" +
                      step.kind_name() + "): " + e.what());
    }

    // E transports as a strict transform; the fiber through the center is
    // contracted and the new boundary fiber is the target fiber class.
    long long me = multiplicity_along_center(step, e_poly, limits);
    DivisorClass e_next = transport_class(step, kXiClass, me);
    DivisorClass f_contracted = transport_class(step, kFiberClass, 1);
    if (e_next != kXiClass)
      throw LinkError("synthesize: boundary class drifts from xi at step " +
                      std::to_string(index));
    if (f_contracted != DivisorClass{0, 0})
      throw LinkError("synthesize: center fiber fails to contract at step " +
                      std::to_string(index));
    r.boundary_classes.emplace_back(e_next, kFiberClass);
    ++index;
  }

  std::vector<Polynomial> boundary = {Polynomial::variable(Var::x3),
                                      Polynomial::variable(Var::t1)};
  r.certificate = verify_all(r.action, boundary, BasePoint::standard(), limits);
  if (!r.certificate.valid())
    throw LinkError("synthesize: final certificate invalid (" +
                    r.certificate.first_failing() + ")");
  return r;
}

}  // namespace ga3
