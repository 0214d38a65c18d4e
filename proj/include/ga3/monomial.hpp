#pragma once

#include <array>
#include <numeric>
#include <sstream>
#include <string>

#include "ga3/variables.hpp"

namespace ga3 {

// Exponent vector over the fixed variable set. Absent exponents are zero.
struct Monomial {
  std::array<int, kNumVars> e{};

  static Monomial one() { return {}; }

  static Monomial of(Var v, int exp = 1) {
    Monomial m;
    m.e[index_of(v)] = exp;
    return m;
  }

  int degree_in(Var v) const { return e[index_of(v)]; }

  int total_degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  bool is_one() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // Quotient; only valid when *this divides o is reversed: o = *this * result.
  Monomial divide(const Monomial& d) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - d.e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  std::string str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!first) os << '*';
      os << name_of(var_at(i));
      if (e[i] > 1) os << '^' << e[i];
      first = false;
    }
    return os.str();
  }
};

// Graded lexicographic order on the fixed variable list t1, t2, x1, x2, x3,
// u, v, w, u', v', w': total degree first, ties broken by the earliest
// variable with a differing exponent (higher exponent wins). Returns true
// when a is strictly larger than b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (int i = 0; i < kNumVars; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_greater(a, b);
  }
};

}  // namespace ga3
