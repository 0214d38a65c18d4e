#include <doctest.h>

#include <random>

#include "ga3/links.hpp"
#include "ga3/parse.hpp"
#include "test_util.hpp"

using namespace ga3;
using ga3::test::P;

TEST_CASE("link_map passes its construction contract and chart identity") {
  RationalMap line = link_map(LinkStep::line(1));
  CHECK(line.images[2] == P("t1*x1"));
  CHECK(line.images[3] == P("t1*x2"));
  CHECK(line.images[4] == P("x3"));

  RationalMap point = link_map(LinkStep::point(1, 1));
  CHECK(point.images[2] == P("t1*x1"));
  CHECK(point.images[3] == P("x2"));

  std::map<Var, Polynomial> chart = {{Var::t1, Polynomial::constant(1)},
                                     {Var::x3, Polynomial::constant(1)}};
  for (const RationalMap& m : {line, point}) {
    CHECK(m.images[1].substitute(chart) == P("t2"));
    CHECK(m.images[2].substitute(chart) == P("x1"));
    CHECK(m.images[3].substitute(chart) == P("x2"));
  }
}

TEST_CASE("link_map indeterminacy is exactly the center") {
  // line center (t1, x3): the x-images vanish there and only there (up to
  // the irrelevant x-locus)
  LinkStep s = LinkStep::line(2);
  RationalMap m = link_map(s);
  std::vector<Polynomial> x_images = {m.images[2], m.images[3], m.images[4]};
  for (const Polynomial& img : x_images)
    CHECK(ideal_member(img, s.center_ideal).is_member());
  for (Var xv : {Var::x1, Var::x2, Var::x3})
    CHECK(ideal_member(P("t1") * Polynomial::variable(xv), x_images)
              .is_member());
  // but t1 alone is not in the x-image ideal (the x = 0 locus intervenes)
  CHECK(!ideal_member(P("t1"), x_images).is_member());
}

TEST_CASE("transport_class") {
  LinkStep s = LinkStep::line(0);
  // H containing the center, multiplicity 1, stays the tautological class
  CHECK(transport_class(s, kXiClass, 1) == kXiClass);
  // the fiber through the center is contracted
  CHECK(transport_class(s, kFiberClass, 1) == DivisorClass{0, 0});
  // fibers away from infinity are untouched
  CHECK(transport_class(s, kFiberClass, 0) == kFiberClass);
  // total transform rule underneath: (a, b) -> (a, a+b)
  CHECK(transport_class(s, DivisorClass{2, 3}, 0) == DivisorClass{2, 5});
  CHECK_THROWS_AS(transport_class(s, DivisorClass{1, 0}, 2),
                  std::invalid_argument);
}

TEST_CASE("multiplicity_along_center") {
  LinkStep line = LinkStep::line(1);
  CHECK(multiplicity_along_center(line, P("x3")) == 1);
  CHECK(multiplicity_along_center(line, P("t1*x3")) == 2);
  CHECK(multiplicity_along_center(line, P("x1")) == 0);
  LinkStep point = LinkStep::point(2, 1);
  CHECK(multiplicity_along_center(point, P("x2")) == 1);
  CHECK(multiplicity_along_center(point, P("t1^2*x2*x3")) == 4);
}

TEST_CASE("multiplicity is additive on products") {
  std::mt19937 rng(53);
  LinkStep s = LinkStep::line(1);
  BundleType B = s.source;
  auto basis_a = linear_system_basis(B, {1, 2});
  auto basis_b = linear_system_basis(B, {2, 2});
  int tried = 0;
  while (tried < 25) {
    Polynomial p = ga3::test::random_bihomogeneous(rng, basis_a);
    Polynomial q = ga3::test::random_bihomogeneous(rng, basis_b);
    if (p.is_zero() || q.is_zero()) continue;
    ++tried;
    CHECK(multiplicity_along_center(s, p * q) ==
          multiplicity_along_center(s, p) + multiplicity_along_center(s, q));
  }
}

TEST_CASE("plan_links") {
  CHECK(plan_links(BundleType(0, 0)).steps.empty());

  LinkPlan p22 = plan_links(BundleType(2, 2));
  REQUIRE(p22.steps.size() == 2);
  CHECK(p22.steps[0].kind == LinkStep::Kind::line);
  CHECK(p22.steps[0].source == BundleType(0, 0));
  CHECK(p22.steps[1].source == BundleType(1, 1));
  CHECK(p22.steps[1].target == BundleType(2, 2));

  LinkPlan p31 = plan_links(BundleType(3, 1));
  REQUIRE(p31.steps.size() == 3);
  CHECK(p31.steps[0].kind == LinkStep::Kind::line);
  CHECK(p31.steps[1].kind == LinkStep::Kind::point);
  CHECK(p31.steps[1].source == BundleType(1, 1));
  CHECK(p31.steps[2].kind == LinkStep::Kind::point);
  CHECK(p31.steps[2].target == BundleType(3, 1));

  // d2 line steps then d1-d2 point steps, total length d1
  for (int d1 = 0; d1 <= 5; ++d1)
    for (int d2 = 0; d2 <= d1; ++d2) {
      LinkPlan plan = plan_links(BundleType(d1, d2));
      CHECK((int)plan.steps.size() == d1);
      int lines = 0;
      for (const LinkStep& s : plan.steps)
        if (s.kind == LinkStep::Kind::line) ++lines;
      CHECK(lines == d2);
    }
}

TEST_CASE("transport_action along single steps") {
  ActionCandidate a00 = standard_action(BundleType(0, 0));
  ActionCandidate a11 = transport_action(LinkStep::line(0), a00);
  CHECK(a11.bundle == BundleType(1, 1));
  CHECK(a11.images == standard_action(BundleType(1, 1)).images);

  ActionCandidate a21 = transport_action(LinkStep::point(1, 1), a11);
  CHECK(a21.images == standard_action(BundleType(2, 1)).images);

  CHECK(chart_compatible(LinkStep::line(0), a00, a11));
  CHECK(chart_compatible(LinkStep::point(1, 1), a11, a21));
}

TEST_CASE("transport_action rejects an uncertified source") {
  ActionCandidate bad = standard_action(BundleType(1, 1));
  bad.images[1] = P("t2");  // drop-u mutant: orbit rank 2
  CHECK_THROWS_AS(transport_action(LinkStep::point(1, 1), bad), LinkError);
}

TEST_CASE("transport_action rejects a bundle mismatch") {
  ActionCandidate a = standard_action(BundleType(2, 1));
  CHECK_THROWS_AS(transport_action(LinkStep::line(1), a), LinkError);
}

TEST_CASE("synthesize on the grid") {
  for (int d1 = 0; d1 <= 3; ++d1)
    for (int d2 = 0; d2 <= d1; ++d2) {
      BundleType B(d1, d2);
      SynthesisResult r = synthesize(B);
      CHECK(r.certificate.valid());
      CHECK(r.action.images == standard_action(B).images);
      CHECK((int)r.plan.steps.size() == d1);
      for (const auto& [e, f] : r.boundary_classes) {
        CHECK(e == kXiClass);
        CHECK(f == kFiberClass);
      }
    }
}
