#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ga3/polynomial.hpp"

namespace ga3 {

// The split P^2-bundle F(-d1,-d2,0) over P^1 in normalized form d1 >= d2 >= 0,
// presented as the (Gm)^2-quotient of (A^2 \ 0) x (A^3 \ 0) with weights
//   t1,t2 -> (1,0),  x1 -> (d1,1),  x2 -> (d2,1),  x3 -> (0,1).
struct BundleType {
  int d1 = 0;
  int d2 = 0;

  BundleType() = default;
  BundleType(int a, int b) : d1(a), d2(b) {
    if (d2 > d1 || d2 < 0)
      throw std::invalid_argument("bundle type requires d1 >= d2 >= 0");
  }

  bool operator==(const BundleType& o) const {
    return d1 == o.d1 && d2 == o.d2;
  }
  bool operator!=(const BundleType& o) const { return !(*this == o); }

  WeightTable weights() const {
    WeightTable w{};  // parameters carry weight (0,0)
    w[index_of(Var::t1)] = {1, 0};
    w[index_of(Var::t2)] = {1, 0};
    w[index_of(Var::x1)] = {d1, 1};
    w[index_of(Var::x2)] = {d2, 1};
    w[index_of(Var::x3)] = {0, 1};
    return w;
  }

  std::string str() const {
    return "B(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
  }
};

// Integer class a*xi + b*F in the rank-2 Picard lattice of F(-d1,-d2,0).
struct DivisorClass {
  long long a = 0;  // coefficient of the tautological class xi
  long long b = 0;  // coefficient of the fiber class F

  DivisorClass operator+(const DivisorClass& o) const {
    return {a + o.a, b + o.b};
  }
  DivisorClass operator-(const DivisorClass& o) const {
    return {a - o.a, b - o.b};
  }
  friend DivisorClass operator*(long long c, const DivisorClass& d) {
    return {c * d.a, c * d.b};
  }
  bool operator==(const DivisorClass& o) const { return a == o.a && b == o.b; }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }

  std::string str() const {
    return std::to_string(a) + "*xi + " + std::to_string(b) + "*f";
  }
};

inline constexpr DivisorClass kXiClass{1, 0};
inline constexpr DivisorClass kFiberClass{0, 1};

struct NormalizedBundle {
  BundleType bundle;
  int shift = 0;                    // twist subtracted from every entry
  std::array<int, 3> permutation{};  // position i of the sorted entries
};

// F(e1,e2,e3) ~ F(e1-m,e2-m,e3-m) for the maximal entry m; sorting the
// negated entries descending lands in the normal form F(-d1,-d2,0).
inline NormalizedBundle normalize_bundle(int e1, int e2, int e3) {
  std::array<int, 3> e{e1, e2, e3};
  int m = std::max({e1, e2, e3});
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return e[i] < e[j]; });
  NormalizedBundle r;
  r.shift = m;
  r.permutation = idx;
  r.bundle = BundleType(m - e[idx[0]], m - e[idx[1]]);
  return r;
}

// Monomial basis of |a*xi + b*F|: exactly the monomials
// t1^b1 t2^b2 x1^a1 x2^a2 x3^a3 with a1+a2+a3 = a and
// b1+b2 = -d1*a1 - d2*a2 + b, in canonical (descending) monomial order.
inline std::vector<Monomial> linear_system_basis(const BundleType& B,
                                                 const DivisorClass& D) {
  std::vector<Monomial> out;
  if (D.a < 0) return out;
  for (long long a1 = 0; a1 <= D.a; ++a1) {
    for (long long a2 = 0; a1 + a2 <= D.a; ++a2) {
      long long a3 = D.a - a1 - a2;
      long long tdeg = -static_cast<long long>(B.d1) * a1 -
                       static_cast<long long>(B.d2) * a2 + D.b;
      if (tdeg < 0) continue;
      for (long long b1 = 0; b1 <= tdeg; ++b1) {
        Monomial m;
        m.e[index_of(Var::t1)] = static_cast<int>(b1);
        m.e[index_of(Var::t2)] = static_cast<int>(tdeg - b1);
        m.e[index_of(Var::x1)] = static_cast<int>(a1);
        m.e[index_of(Var::x2)] = static_cast<int>(a2);
        m.e[index_of(Var::x3)] = static_cast<int>(a3);
        out.push_back(m);
      }
    }
  }
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

// Effectivity of a*xi + b*F: holds iff a >= 0 and b >= 0.
inline bool is_effective(const BundleType&, const DivisorClass& D) {
  return D.a >= 0 && D.b >= 0;
}

// Whether {D1, D2} generates the effective cone, i.e. equals {xi, F} as an
// unordered pair.
inline bool generates_effective_cone(const BundleType&, const DivisorClass& D1,
                                     const DivisorClass& D2) {
  return (D1 == kXiClass && D2 == kFiberClass) ||
         (D1 == kFiberClass && D2 == kXiClass);
}

// -K = 3*xi + (2 + d1 + d2)*F.
inline DivisorClass canonical_class(const BundleType& B) {
  return {3, 2 + B.d1 + B.d2};
}

// Trilinear intersection form: xi^3 = -(d1+d2), xi^2.F = 1, xi.F^2 = F^3 = 0.
inline long long intersection_number(const BundleType& B,
                                     const DivisorClass& C1,
                                     const DivisorClass& C2,
                                     const DivisorClass& C3) {
  long long s = B.d1 + B.d2;
  long long xi3 = C1.a * C2.a * C3.a;
  long long xi2f = C1.a * C2.a * C3.b + C1.a * C2.b * C3.a + C1.b * C2.a * C3.a;
  return -s * xi3 + xi2f;
}

// Class of the divisor cut by a nonzero parameter-free bihomogeneous
// polynomial, with the convention (a, b) = (mu-weight, lambda-weight) so that
// class(x3) = xi and class(t1) = F.
inline DivisorClass class_of_divisor(const BundleType& B, const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no class");
  if (p.has_parameters())
    throw std::invalid_argument("polynomial must be parameter-free");
  BidegreeResult d = bidegree_of(p, B.weights());
  if (!d.homogeneous())
    throw std::invalid_argument("polynomial is not bihomogeneous");
  return {d.degree.mu_weight, d.degree.lambda_weight};
}

// Automorphism of the Cox cover descending to the quotient. `forward` is the
// substitution normalizing the boundary (E_poly o forward = c * x3), `inverse`
// composes with it to the identity in both orders.
struct CoxAutomorphism {
  std::array<Polynomial, kNumCoxVars> forward;
  std::array<Polynomial, kNumCoxVars> inverse;

  static CoxAutomorphism identity() {
    CoxAutomorphism a;
    for (int i = 0; i < kNumCoxVars; ++i) {
      a.forward[i] = Polynomial::variable(var_at(i));
      a.inverse[i] = a.forward[i];
    }
    return a;
  }

  std::map<Var, Polynomial> forward_map() const {
    std::map<Var, Polynomial> m;
    for (int i = 0; i < kNumCoxVars; ++i) m.emplace(var_at(i), forward[i]);
    return m;
  }

  std::map<Var, Polynomial> inverse_map() const {
    std::map<Var, Polynomial> m;
    for (int i = 0; i < kNumCoxVars; ++i) m.emplace(var_at(i), inverse[i]);
    return m;
  }

  Polynomial apply(const Polynomial& p) const {
    return p.substitute(forward_map());
  }

  // g composed after *this on polynomials: p -> (p o this) o g.
  CoxAutomorphism then(const CoxAutomorphism& g) const {
    CoxAutomorphism r;
    auto gm = g.forward_map();
    auto im = inverse_map();
    for (int i = 0; i < kNumCoxVars; ++i) {
      r.forward[i] = forward[i].substitute(gm);
      r.inverse[i] = g.inverse[i].substitute(im);
    }
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < kNumCoxVars; ++i)
      if (forward[i] != Polynomial::variable(var_at(i))) return false;
    return true;
  }
};

namespace detail {

// Linear form in the listed variables; throws when p has any other shape.
inline std::map<Var, Rational> linear_coefficients(
    const Polynomial& p, const std::vector<Var>& allowed,
    const char* what) {
  std::map<Var, Rational> coeffs;
  for (const auto& [m, c] : p.terms()) {
    Var found = Var::t1;
    bool ok = false;
    for (Var v : allowed) {
      if (m == Monomial::of(v)) {
        found = v;
        ok = true;
        break;
      }
    }
    if (!ok)
      throw std::invalid_argument(std::string(what) +
                                  ": unexpected term " + m.str());
    coeffs[found] = c;
  }
  return coeffs;
}

}  // namespace detail

// Normalizing automorphism h with E_poly o h = c * x3 and F_poly o h = c' * t1
// (nonzero rational c, c'). Handles exactly the admissible shapes: E_poly a
// linear form in the fiber variables of class xi, F_poly a linear form in
// t1, t2. When the x3-coefficient of E_poly vanishes, some d_i = 0 and the
// corresponding coordinate swap is composed in first; likewise for t1.
inline CoxAutomorphism normalize_boundary(const BundleType& B,
                                          const Polynomial& E_poly,
                                          const Polynomial& F_poly) {
  if (class_of_divisor(B, E_poly) != kXiClass)
    throw std::invalid_argument("E_poly is not of class xi");
  if (class_of_divisor(B, F_poly) != kFiberClass)
    throw std::invalid_argument("F_poly is not of class F");

  auto eco = detail::linear_coefficients(E_poly, {Var::x1, Var::x2, Var::x3},
                                         "E_poly");
  auto fco = detail::linear_coefficients(F_poly, {Var::t1, Var::t2}, "F_poly");

  auto coeff = [](const std::map<Var, Rational>& m, Var v) {
    auto it = m.find(v);
    return it == m.end() ? Rational(0) : it->second;
  };

  CoxAutomorphism h = CoxAutomorphism::identity();

  // fiber part: arrange a nonzero x3-coefficient, then shear it to x3
  Rational u1 = coeff(eco, Var::x1), u2 = coeff(eco, Var::x2),
           u3 = coeff(eco, Var::x3);
  if (u3 == 0) {
    Var swap_with;
    if (u1 != 0 && B.d1 == 0) {
      swap_with = Var::x1;
    } else if (u2 != 0 && B.d2 == 0) {
      swap_with = Var::x2;
    } else {
      throw std::invalid_argument(
          "E_poly does not define a sub-P1-bundle of the admissible shape");
    }
    CoxAutomorphism s = CoxAutomorphism::identity();
    s.forward[index_of(swap_with)] = Polynomial::variable(Var::x3);
    s.forward[index_of(Var::x3)] = Polynomial::variable(swap_with);
    s.inverse = s.forward;
    h = h.then(s);
    std::swap(swap_with == Var::x1 ? u1 : u2, u3);
  }
  if (u1 != 0 || u2 != 0 || u3 != 1) {
    CoxAutomorphism sh = CoxAutomorphism::identity();
    Polynomial x1p = Polynomial::variable(Var::x1);
    Polynomial x2p = Polynomial::variable(Var::x2);
    Polynomial x3p = Polynomial::variable(Var::x3);
    sh.forward[index_of(Var::x3)] =
        (Rational(1) / u3) * (x3p - u1 * x1p - u2 * x2p);
    sh.inverse[index_of(Var::x3)] = u3 * x3p + u1 * x1p + u2 * x2p;
    h = h.then(sh);
  }

  // base part: F_poly = alpha*t1 + beta*t2 -> t1
  Rational alpha = coeff(fco, Var::t1), beta = coeff(fco, Var::t2);
  if (alpha == 0) {
    CoxAutomorphism s = CoxAutomorphism::identity();
    s.forward[index_of(Var::t1)] = Polynomial::variable(Var::t2);
    s.forward[index_of(Var::t2)] = Polynomial::variable(Var::t1);
    s.inverse = s.forward;
    h = h.then(s);
    std::swap(alpha, beta);
  }
  if (alpha != 1 || beta != 0) {
    CoxAutomorphism sh = CoxAutomorphism::identity();
    Polynomial t1p = Polynomial::variable(Var::t1);
    Polynomial t2p = Polynomial::variable(Var::t2);
    sh.forward[index_of(Var::t1)] = (Rational(1) / alpha) * (t1p - beta * t2p);
    sh.inverse[index_of(Var::t1)] = alpha * t1p + beta * t2p;
    h = h.then(sh);
  }

  // construction-time sanity: images normalize the boundary on the nose
  Polynomial e_img = h.apply(E_poly);
  Polynomial f_img = h.apply(F_poly);
  Polynomial x3v = Polynomial::variable(Var::x3);
  Polynomial t1v = Polynomial::variable(Var::t1);
  if (e_img != e_img.leading_coeff() * x3v ||
      f_img != f_img.leading_coeff() * t1v)
    throw std::logic_error("normalize_boundary postcondition failed");
  return h;
}

}  // namespace ga3
