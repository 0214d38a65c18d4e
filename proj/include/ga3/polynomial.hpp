#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ga3/monomial.hpp"
#include "ga3/rational.hpp"
#include "ga3/variables.hpp"

namespace ga3 {

// Sparse multivariate polynomial with exact rational coefficients over the
// fixed variable set. Zero coefficients are never stored; the zero polynomial
// is the empty term map. Terms are kept sorted with the leading monomial
// first (graded lex, descending).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;

  static Polynomial constant(Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
  }

  static Polynomial variable(Var v) {
    Polynomial p;
    p.terms_.emplace(Monomial::of(v), Rational(1));
    return p;
  }

  static Polynomial term(Monomial m, Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  // Coefficient of a monomial, zero when absent.
  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw std::domain_error("leading_monomial of zero");
    return terms_.begin()->first;
  }

  const Rational& leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading_coeff of zero");
    return terms_.begin()->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int md = m.total_degree();
      if (md > d) d = md;
    }
    return d;
  }

  bool depends_on(Var v) const {
    for (const auto& [m, c] : terms_)
      if (m.degree_in(v) > 0) return true;
    return false;
  }

  bool has_parameters() const {
    for (int i = kNumCoxVars; i < kNumVars; ++i)
      if (depends_on(var_at(i))) return true;
    return false;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }

  Polynomial pow(int n) const {
    if (n < 0) throw std::domain_error("negative power");
    Polynomial r = constant(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  // Simultaneous substitution; variables absent from the map stay themselves.
  Polynomial substitute(const std::map<Var, Polynomial>& assignment) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(c);
      for (int i = 0; i < kNumVars; ++i) {
        int exp = m.e[i];
        if (exp == 0) continue;
        auto it = assignment.find(var_at(i));
        if (it == assignment.end()) {
          t *= Polynomial::term(Monomial::of(var_at(i), exp), Rational(1));
        } else {
          t *= it->second.pow(exp);
        }
      }
      result += t;
    }
    return result;
  }

  Polynomial differentiate(Var v) const {
    Polynomial r;
    int vi = index_of(v);
    for (const auto& [m, c] : terms_) {
      int exp = m.e[vi];
      if (exp == 0) continue;
      Monomial dm = m;
      dm.e[vi] -= 1;
      r.add_term(dm, c * exp);
    }
    return r;
  }

  // Canonical printing: terms in descending monomial order, explicit * and ^.
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          os << '-';
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (m.is_one()) {
        os << to_string(a);
      } else if (a == 1) {
        os << m.str();
      } else {
        os << to_string(a) << '*' << m.str();
      }
      first = false;
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

// Component weight of a variable under the (Gm)^2 grading.
struct Bidegree {
  long long lambda_weight = 0;
  long long mu_weight = 0;

  Bidegree operator+(const Bidegree& o) const {
    return {lambda_weight + o.lambda_weight, mu_weight + o.mu_weight};
  }
  bool operator==(const Bidegree& o) const {
    return lambda_weight == o.lambda_weight && mu_weight == o.mu_weight;
  }
  bool operator!=(const Bidegree& o) const { return !(*this == o); }
};

using WeightTable = std::array<Bidegree, kNumVars>;

struct BidegreeResult {
  enum class Kind { homogeneous, heterogeneous, any_degree };
  Kind kind = Kind::any_degree;
  Bidegree degree{};  // meaningful only when homogeneous

  bool homogeneous() const { return kind == Kind::homogeneous; }
};

inline Bidegree bidegree_of_monomial(const Monomial& m, const WeightTable& w) {
  Bidegree d;
  for (int i = 0; i < kNumVars; ++i) {
    if (m.e[i] == 0) continue;
    d.lambda_weight += static_cast<long long>(m.e[i]) * w[i].lambda_weight;
    d.mu_weight += static_cast<long long>(m.e[i]) * w[i].mu_weight;
  }
  return d;
}

// Common bidegree of all terms; the zero polynomial has any degree and a
// mixed-weight polynomial is reported heterogeneous (not an error).
inline BidegreeResult bidegree_of(const Polynomial& p, const WeightTable& w) {
  if (p.is_zero()) return {BidegreeResult::Kind::any_degree, {}};
  BidegreeResult r;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Bidegree d = bidegree_of_monomial(m, w);
    if (first) {
      r.degree = d;
      first = false;
    } else if (d != r.degree) {
      return {BidegreeResult::Kind::heterogeneous, {}};
    }
  }
  r.kind = BidegreeResult::Kind::homogeneous;
  return r;
}

}  // namespace ga3
