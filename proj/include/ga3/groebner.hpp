#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "ga3/polynomial.hpp"

namespace ga3 {

struct GroebnerLimits {
  std::size_t max_basis = 256;
  int max_degree = 48;
};

// Outcome of an ideal-membership query. Member carries cofactors g_i with
// p = sum g_i * generators_i, re-checkable by multiplication. NotProven means
// the normal form against the completed basis is nonzero, which is a sound
// negative for the given generators. ResourceLimit is reported separately and
// never conflated with NotProven.
struct MembershipResult {
  enum class Status { member, not_proven, resource_limit };
  Status status = Status::not_proven;
  std::vector<Polynomial> witness;  // cofactors over the original generators
  Polynomial normal_form;           // nonzero when not_proven

  bool is_member() const { return status == Status::member; }
};

namespace detail {

// Basis element with its representation over the original generators.
struct TrackedPoly {
  Polynomial poly;
  std::vector<Polynomial> rep;
};

// Reduce p to normal form against basis, accumulating the used combination
// into the representation vector (over the original generators).
inline Polynomial reduce_tracked(Polynomial p,
                                 const std::vector<TrackedPoly>& basis,
                                 std::vector<Polynomial>& rep) {
  Polynomial remainder;
  while (!p.is_zero()) {
    bool reduced = false;
    const Monomial& lm = p.leading_monomial();
    for (const TrackedPoly& g : basis) {
      if (!g.poly.leading_monomial().divides(lm)) continue;
      Monomial q = lm.divide(g.poly.leading_monomial());
      Rational c = p.leading_coeff() / g.poly.leading_coeff();
      Polynomial factor = Polynomial::term(q, c);
      p -= factor * g.poly;
      for (std::size_t i = 0; i < rep.size(); ++i)
        rep[i] += factor * g.rep[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      // move leading term to the remainder
      remainder.add_term(lm, p.leading_coeff());
      Polynomial lead = Polynomial::term(lm, p.leading_coeff());
      p -= lead;
    }
  }
  return remainder;
}

class Buchberger {
 public:
  Buchberger(const std::vector<Polynomial>& generators,
             const GroebnerLimits& limits)
      : limits_(limits) {
    n_ = generators.size();
    for (std::size_t i = 0; i < n_; ++i) {
      if (generators[i].is_zero()) continue;
      TrackedPoly t;
      t.poly = generators[i];
      t.rep.assign(n_, Polynomial());
      t.rep[i] = Polynomial::constant(1);
      add(std::move(t));
    }
  }

  bool completed() { return run(); }

  const std::vector<TrackedPoly>& basis() const { return basis_; }
  std::size_t generator_count() const { return n_; }

 private:
  GroebnerLimits limits_;
  std::size_t n_ = 0;
  std::vector<TrackedPoly> basis_;
  std::deque<std::pair<std::size_t, std::size_t>> pairs_;

  void add(TrackedPoly t) {
    std::size_t k = basis_.size();
    for (std::size_t i = 0; i < k; ++i) pairs_.emplace_back(i, k);
    basis_.push_back(std::move(t));
  }

  // Returns false when a resource limit was hit before completion.
  bool run() {
    while (!pairs_.empty()) {
      auto [i, j] = pairs_.front();
      pairs_.pop_front();
      const Monomial& li = basis_[i].poly.leading_monomial();
      const Monomial& lj = basis_[j].poly.leading_monomial();
      Monomial l = Monomial::lcm(li, lj);
      // first Buchberger criterion: coprime leading terms
      if (l == li * lj) continue;

      Polynomial fi = Polynomial::term(l.divide(li),
                                       Rational(1) / basis_[i].poly.leading_coeff());
      Polynomial fj = Polynomial::term(l.divide(lj),
                                       Rational(1) / basis_[j].poly.leading_coeff());
      Polynomial s = fi * basis_[i].poly - fj * basis_[j].poly;
      std::vector<Polynomial> rep(n_);
      for (std::size_t k = 0; k < n_; ++k)
        rep[k] = fi * basis_[i].rep[k] - fj * basis_[j].rep[k];

      // subtract the reduction; reduce_tracked accumulates what was used,
      // so flip signs to keep s = sum rep_k * gen_k for the remainder
      std::vector<Polynomial> used(n_);
      Polynomial r = reduce_tracked(std::move(s), basis_, used);
      if (r.is_zero()) continue;
      for (std::size_t k = 0; k < n_; ++k) rep[k] -= used[k];

      if (r.total_degree() > limits_.max_degree) return false;
      TrackedPoly t;
      t.poly = std::move(r);
      t.rep = std::move(rep);
      add(std::move(t));
      if (basis_.size() > limits_.max_basis) return false;
    }
    return true;
  }
};

}  // namespace detail

// Decide membership of p in the ideal generated by `generators`, with all
// variables (parameters included) treated as polynomial variables over Q.
inline MembershipResult ideal_member(const Polynomial& p,
                                     const std::vector<Polynomial>& generators,
                                     const GroebnerLimits& limits = {}) {
  detail::Buchberger engine(generators, limits);
  if (!engine.completed()) {
    MembershipResult r;
    r.status = MembershipResult::Status::resource_limit;
    return r;
  }
  std::vector<Polynomial> rep(generators.size());
  Polynomial nf = detail::reduce_tracked(p, engine.basis(), rep);
  MembershipResult r;
  if (nf.is_zero()) {
    r.status = MembershipResult::Status::member;
    r.witness = std::move(rep);
  } else {
    r.status = MembershipResult::Status::not_proven;
    r.normal_form = std::move(nf);
  }
  return r;
}

}  // namespace ga3
