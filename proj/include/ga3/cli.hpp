#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ga3/classify.hpp"
#include "ga3/json_io.hpp"
#include "ga3/parse.hpp"

namespace ga3::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Bundle descriptor: B(d1,d2) in normalized form or F(e1,e2,e3), which is
// normalized by twisting and sorting.
inline BundleType parse_bundle(const std::string& text) {
  std::istringstream is(text);
  char kind = 0, c = 0;
  is >> kind;
  if (kind == 'B') {
    int d1 = 0, d2 = 0;
    char c2 = 0, c3 = 0;
    is >> c >> d1 >> c2 >> d2 >> c3;
    if (!is || c != '(' || c2 != ',' || c3 != ')')
      throw std::invalid_argument("bad bundle descriptor: " + text);
    return BundleType(d1, d2);
  }
  if (kind == 'F') {
    int e1 = 0, e2 = 0, e3 = 0;
    char c2 = 0, c3 = 0, c4 = 0;
    is >> c >> e1 >> c2 >> e2 >> c3 >> e3 >> c4;
    if (!is || c != '(' || c2 != ',' || c3 != ',' || c4 != ')')
      throw std::invalid_argument("bad bundle descriptor: " + text);
    return normalize_bundle(e1, e2, e3).bundle;
  }
  throw std::invalid_argument("bad bundle descriptor: " + text);
}

// Divisor class: `a*xi + b*f` with integer a, b; bare `xi`, `f`; `-K` as an
// alias for the canonical class of the bundle at hand.
inline DivisorClass parse_class(const std::string& text, const BundleType& B) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "-K") return canonical_class(B);
  if (s == "K") {
    DivisorClass mk = canonical_class(B);
    return {-mk.a, -mk.b};
  }

  DivisorClass d{0, 0};
  std::size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    long long coeff = 1;
    bool have_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        coeff = coeff * 10 + (s[i++] - '0');
      have_num = true;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_num) throw std::invalid_argument("bad class: " + text);
      ++i;
    }
    if (i + 1 < s.size() && s.compare(i, 2, "xi") == 0) {
      d.a += sign * coeff;
      i += 2;
    } else if (i < s.size() && (s[i] == 'f' || s[i] == 'F')) {
      d.b += sign * coeff;
      i += 1;
    } else {
      throw std::invalid_argument("bad class: " + text);
    }
  }
  return d;
}

struct Options {
  bool text = false;
  GroebnerLimits limits;
};

inline void emit(std::ostream& out, const Json& j, bool text) {
  if (text && j.is_string())
    out << j.get<std::string>() << "\n";
  else
    out << j.dump(2) << "\n";
}

inline bool mentions_resource_limit(const Certificate& c) {
  for (const auto& [name, r] : c.ordered())
    if (r->status == CheckResult::Status::inconclusive &&
        r->detail.find("resource limit") != std::string::npos)
      return true;
  return false;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "Symbolic classifier and certificate generator for Ga^3-structures on "
      "del Pezzo fibrations (split P^2-bundles over P^1)"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--text", opt.text, "plain-text output instead of JSON");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_option("--max-degree", opt.limits.max_degree,
                 "degree cap for the ideal-membership engine");

  std::string bundle_str;
  std::vector<std::string> class_strs;
  std::vector<std::string> poly_strs;
  int degree = 0;
  bool have_degree = false;
  std::string kind_str;

  auto add_bundle = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("-b,--bundle", bundle_str,
                              "bundle descriptor, B(d1,d2) or F(e1,e2,e3)");
    if (required) o->required();
  };

  CLI::App* c_classify = app.add_subcommand(
      "classify", "decide whether a fibration admits a Ga^3-structure");
  add_bundle(c_classify, false);
  c_classify->add_option("--degree", degree, "degree form of the query")
      ->check(CLI::Range(1, 9));
  c_classify->add_option("-c,--class", class_strs,
                         "boundary divisor class (repeatable)");
  c_classify->add_option("-p,--poly", poly_strs,
                         "boundary polynomial (repeatable)");

  CLI::App* c_synth = app.add_subcommand(
      "synthesize", "build and certify the Ga^3-structure on a bundle");
  add_bundle(c_synth, true);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "verify a candidate action given by five images");
  add_bundle(c_verify, true);
  c_verify->add_option("-p,--poly", poly_strs,
                       "images of t1,t2,x1,x2,x3 in order (five, each may use "
                       "parameters u,v,w)");

  CLI::App* c_linsys =
      app.add_subcommand("linsys", "monomial basis of a linear system");
  add_bundle(c_linsys, true);
  c_linsys->add_option("-c,--class", class_strs, "divisor class")->required();

  CLI::App* c_intersect =
      app.add_subcommand("intersect", "triple intersection number");
  add_bundle(c_intersect, true);
  c_intersect->add_option("-c,--class", class_strs,
                          "three divisor classes (-K accepted)")
      ->required();

  CLI::App* c_plan =
      app.add_subcommand("plan", "elementary-link plan from P^1 x P^2");
  add_bundle(c_plan, true);

  CLI::App* c_link = app.add_subcommand("link", "one elementary link map");
  add_bundle(c_link, true);
  c_link->add_option("--kind", kind_str,
                     "line or point (default: line when d1 = d2)");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int code = app.exit(e, os, os);
    (code == 0 ? out : err) << os.str();
    return code == 0 ? kExitYes : kExitUsage;
  }
  have_degree = c_classify->count("--degree") > 0;

  try {
    if (*c_classify) {
      FibrationDescriptor desc;
      if (have_degree) desc.degree = degree;
      if (!bundle_str.empty()) desc.bundle = parse_bundle(bundle_str);
      if (class_strs.size() == 2 && desc.bundle) {
        desc.boundary_classes = {parse_class(class_strs[0], *desc.bundle),
                                 parse_class(class_strs[1], *desc.bundle)};
      } else if (poly_strs.size() == 2) {
        desc.boundary_polys = {parse_polynomial(poly_strs[0]),
                               parse_polynomial(poly_strs[1])};
      } else if (!class_strs.empty() || !poly_strs.empty()) {
        err << "classify: boundary needs exactly two classes or polynomials\n";
        return kExitUsage;
      }
      Decision d = classify(desc, opt.limits);
      Json j;
      j["verdict"] = d.yes ? "yes" : "no";
      if (d.rule) {
        j["rule"] = Json{{"id", d.rule->id}, {"statement", d.rule->statement}};
      }
      if (!d.note.empty()) j["note"] = d.note;
      if (d.synthesis) j["result"] = to_json(*d.synthesis);
      if (opt.text) {
        out << (d.yes ? "yes" : "no");
        if (d.rule) out << " (" << d.rule->id << ": " << d.rule->statement << ")";
        if (!d.note.empty()) out << " [" << d.note << "]";
        out << "\n";
      } else {
        emit(out, j, false);
      }
      return d.yes ? kExitYes : kExitNo;
    }

    if (*c_synth) {
      SynthesisResult r = synthesize(parse_bundle(bundle_str), opt.limits);
      emit(out, to_json(r), false);
      return r.certificate.valid() ? kExitYes : kExitNo;
    }

    if (*c_verify) {
      if (poly_strs.size() != 5) {
        err << "verify: exactly five -p images required\n";
        return kExitUsage;
      }
      ActionCandidate a;
      a.bundle = parse_bundle(bundle_str);
      for (int i = 0; i < kNumCoxVars; ++i)
        a.images[i] = parse_polynomial(poly_strs[i]);
      std::vector<Polynomial> boundary = {Polynomial::variable(Var::x3),
                                          Polynomial::variable(Var::t1)};
      Certificate c = verify_all(a, boundary, BasePoint::standard(), opt.limits);
      emit(out, to_json(c), false);
      if (mentions_resource_limit(c)) return kExitResource;
      return c.valid() ? kExitYes : kExitNo;
    }

    if (*c_linsys) {
      BundleType B = parse_bundle(bundle_str);
      DivisorClass D = parse_class(class_strs.at(0), B);
      Json j = Json::array();
      for (const Monomial& m : linear_system_basis(B, D)) j.push_back(m.str());
      emit(out, j, false);
      return kExitYes;
    }

    if (*c_intersect) {
      BundleType B = parse_bundle(bundle_str);
      if (class_strs.size() != 3) {
        err << "intersect: exactly three -c classes required\n";
        return kExitUsage;
      }
      long long n = intersection_number(B, parse_class(class_strs[0], B),
                                        parse_class(class_strs[1], B),
                                        parse_class(class_strs[2], B));
      out << n << "\n";
      return kExitYes;
    }

    if (*c_plan) {
      emit(out, to_json(plan_links(parse_bundle(bundle_str))), false);
      return kExitYes;
    }

    if (*c_link) {
      BundleType B = parse_bundle(bundle_str);
      LinkStep step;
      std::string kind = kind_str.empty()
                             ? (B.d1 == B.d2 ? "line" : "point")
                             : kind_str;
      if (kind == "line") {
        if (B.d1 != B.d2) {
          err << "link: line links need d1 = d2\n";
          return kExitUsage;
        }
        step = LinkStep::line(B.d1);
      } else if (kind == "point") {
        step = LinkStep::point(B.d1, B.d2);
      } else {
        err << "link: --kind must be line or point\n";
        return kExitUsage;
      }
      RationalMap m = link_map(step);
      Json j = to_json(step);
      Json images;
      for (int i = 0; i < kNumCoxVars; ++i)
        images[std::string(name_of(var_at(i)))] = m.images[i].str();
      j["images"] = images;
      emit(out, j, false);
      return kExitYes;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const LinkError& e) {
    err << e.what() << "\n";
    return std::string(e.what()).find("resource limit") != std::string::npos
               ? kExitResource
               : kExitNo;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ga3::cli
