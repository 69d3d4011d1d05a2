// tck: invariants, quotient orbifolds, contact-homology generator censuses
// and equivalence verdicts for toric contact structures on S^3-bundles
// over S^2.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tck/equivalence.hpp"
#include "tck/hirzebruch.hpp"
#include "tck/numeric.hpp"
#include "tck/polytope.hpp"
#include "tck/quadruple.hpp"
#include "tck/rational.hpp"
#include "tck/spectrum.hpp"

namespace {

using json = nlohmann::ordered_json;
using tck::DivisorBasis;
using tck::DivisorClass;
using tck::ManifoldType;
using tck::Parity;
using tck::Quadruple;
using tck::Rational;

constexpr int kSchemaVersion = 1;

// ---- parsing helpers ------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::domain_error(what + ": '" + text + "' is not an integer");
  }
}

Quadruple parse_quadruple(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw std::domain_error("quadruple must be four comma-separated integers, got '" + text + "'");
  return tck::make_quadruple(parse_integer(parts[0], "p1"), parse_integer(parts[1], "p2"),
                             parse_integer(parts[2], "p3"), parse_integer(parts[3], "p4"));
}

Rational parse_rational(const std::string& text, const std::string& what) {
  const auto parts = split(text, '/');
  if (parts.size() == 1) return Rational(parse_integer(parts[0], what));
  if (parts.size() == 2)
    return Rational(parse_integer(parts[0], what), parse_integer(parts[1], what));
  throw std::domain_error(what + ": '" + text + "' is not a rational (use a or a/b)");
}

ManifoldType parse_bundle(const std::string& text) {
  if (text == "trivial" || text == "s2xs3") return ManifoldType::TrivialBundle;
  if (text == "nontrivial" || text == "xinf") return ManifoldType::NontrivialBundle;
  throw std::domain_error("bundle must be 'trivial' or 'nontrivial', got '" + text + "'");
}

// ---- rendering helpers ----------------------------------------------------

json json_rational(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

json json_divisor_class(const DivisorClass& c) {
  json out;
  out["basis"] = tck::to_string(c.basis);
  out["e"] = json_rational(c.e);
  out["l"] = json_rational(c.l);
  if (c.surface != tck::kAnySurface) out["surface"] = c.surface;
  return out;
}

std::string class_text(const DivisorClass& c) {
  std::ostringstream os;
  os << c.e.str() << " " << tck::to_string(c.basis) << " ";
  if (c.l < Rational(0))
    os << "- " << (-c.l).str();
  else
    os << "+ " << c.l.str();
  os << " L";
  return os.str();
}

std::string joined(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  os << "{";
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (a > 0) os << ",";
    os << values[a];
  }
  os << "}";
  return os.str();
}

std::string level_name(std::int64_t i, Parity parity, ManifoldType bundle) {
  std::string name = "g^{-1}(" + std::to_string(i) + ")";
  if (bundle == ManifoldType::TrivialBundle) name += std::string("_") + tck::to_string(parity);
  return name;
}

// Output sink: every subcommand fills both views and main prints one.
struct Report {
  std::ostringstream text;
  json doc;
};

// ---- subcommand handlers --------------------------------------------------

void report_admissible(Report& r, const Quadruple& q) {
  const bool ok = tck::is_admissible(q);
  r.doc["p"] = {q.p1, q.p2, q.p3, q.p4};
  r.doc["admissible"] = ok;
  r.text << q.str() << ": " << (ok ? "admissible" : "not admissible");
  if (!ok) {
    json bad = json::array();
    std::vector<std::pair<std::int64_t, std::int64_t>> seen;
    r.text << "  (";
    for (std::int64_t a : {q.p1, q.p2})
      for (std::int64_t b : {q.p3, q.p4}) {
        if (std::gcd(a, b) == 1) continue;
        if (std::find(seen.begin(), seen.end(), std::make_pair(a, b)) != seen.end()) continue;
        if (!seen.empty()) r.text << ", ";
        seen.emplace_back(a, b);
        r.text << "gcd(" << a << "," << b << ") = " << std::gcd(a, b);
        bad.push_back({a, b});
      }
    r.text << ")";
    r.doc["violations"] = bad;
  }
  r.text << "\n";
  const Quadruple c = tck::canonical_form(q);
  r.doc["canonicalForm"] = {c.p1, c.p2, c.p3, c.p4};
  r.text << "canonical form: " << c.str() << "\n";
}

void report_invariants(Report& r, const Quadruple& q, const std::optional<std::string>& cone) {
  tck::require_admissible(q);
  const std::int64_t c1 = tck::first_chern_coefficient(q);
  const ManifoldType bundle = tck::manifold_type(q);
  const Quadruple c = tck::canonical_form(q);
  r.doc["p"] = {q.p1, q.p2, q.p3, q.p4};
  r.doc["canonicalForm"] = {c.p1, c.p2, c.p3, c.p4};
  r.doc["c1"] = c1;
  r.doc["manifold"] = tck::to_string(bundle);
  r.text << "p = " << q.str() << "   canonical form " << c.str() << "\n";
  r.text << "c1(D_p) = " << c1 << " gamma   manifold " << tck::to_string(bundle) << "\n";
  if (const auto y = tck::quadruple_to_ypq(q)) {
    r.doc["ypq"] = {{"p", y->p}, {"q", y->q}};
    r.text << "Y^{p,q} form: Y^{" << y->p << "," << y->q << "}\n";
  } else {
    r.doc["ypq"] = nullptr;
    r.text << "Y^{p,q} form: none\n";
  }
  if (cone) {
    const auto parts = split(*cone, ',');
    if (parts.size() != 4) throw std::domain_error("--cone needs four comma-separated rationals");
    const tck::SasakiConeVector vec{parse_rational(parts[0], "a1"), parse_rational(parts[1], "a2"),
                                    parse_rational(parts[2], "a3"), parse_rational(parts[3], "a4")};
    const bool inside = tck::sasaki_cone_contains(q, vec);
    r.doc["sasakiCone"] = {{"vector",
                            {json_rational(vec.a1), json_rational(vec.a2), json_rational(vec.a3),
                             json_rational(vec.a4)}},
                           {"contains", inside}};
    r.text << "Reeb candidate (" << vec.a1.str() << "," << vec.a2.str() << "," << vec.a3.str()
           << "," << vec.a4.str() << "): " << (inside ? "inside" : "outside")
           << " the Sasaki cone\n";
  }
}

json json_level_entry(std::int64_t k, std::int64_t l, ManifoldType bundle, std::int64_t i,
                      Parity parity, const std::vector<std::int64_t>& js) {
  json level;
  level["i"] = i;
  level["parity"] = tck::to_string(parity);
  level["j"] = js;
  json surfaces = json::array();
  json log_del_pezzo = json::array();
  std::int64_t m = 1;
  for (std::int64_t jj : js) {
    const tck::LevelData d = tck::level_of({k, l, jj, bundle});
    surfaces.push_back(d.n);
    log_del_pezzo.push_back(tck::is_log_del_pezzo(d.n, d.m));
    m = d.m;
  }
  level["m"] = m;
  level["surfaces"] = surfaces;
  level["logDelPezzo"] = log_del_pezzo;
  level["symplecticClass"] =
      json_divisor_class(tck::symplectic_class_at_level(k, l, i, parity, bundle));
  // Lower bound on conjugacy classes of maximal 3-tori; the Sasaki bouquet
  // attached to this contact structure has the same size.
  level["toriLowerBound"] = tck::tori_conjugacy_lower_bound(k, l, i, parity, bundle);
  level["bouquet"] = tck::bouquet_size(k, l, i, parity, bundle);
  if (i == l && k >= l)
    level["closedFormCardinality"] = tck::top_level_cardinality(k, l, bundle, parity);
  return level;
}

void report_enumerate(Report& r, std::int64_t k, std::int64_t l, ManifoldType bundle) {
  const auto js = tck::admissible_set(k, l, bundle);
  const auto levels = tck::level_decomposition(k, l, bundle);
  const std::string set_name = bundle == ManifoldType::TrivialBundle ? "J_A" : "J_A^inf";
  r.doc["k"] = k;
  r.doc["l"] = l;
  r.doc["bundle"] = tck::to_string(bundle);
  r.doc["admissible"] = js;
  r.text << set_name << "(" << k << "," << l << ") = " << joined(js) << "   #" << set_name
         << " = " << js.size() << "   (" << tck::to_string(bundle) << ")\n";
  json jlevels = json::array();
  // List the top level first and even parity before odd, the way the
  // worked tables read.
  std::vector<tck::LevelKey> keys;
  for (const auto& [key, members] : levels) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const tck::LevelKey& x, const tck::LevelKey& y) {
    if (x.i != y.i) return x.i > y.i;
    return x.parity < y.parity;
  });
  for (const tck::LevelKey& key : keys) {
    const auto& members = levels.at(key);
    jlevels.push_back(json_level_entry(k, l, bundle, key.i, key.parity, members));
    const tck::LevelData d = tck::level_of({k, l, members.front(), bundle});
    r.text << level_name(key.i, key.parity, bundle) << " = " << joined(members) << "   m_" << key.i
           << " = " << d.m << ", surfaces ";
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (a > 0) r.text << ",";
      r.text << "S_" << tck::level_of({k, l, members[a], bundle}).n;
    }
    r.text << ", [omega_{" << k << "," << l << "," << key.i << "}] = "
           << class_text(tck::symplectic_class_at_level(k, l, key.i, key.parity, bundle))
           << ", bouquet/3-tori >= " << members.size();
    if (key.i == l && k >= l)
      r.text << "   (closed form: " << tck::top_level_cardinality(k, l, bundle, key.parity) << ")";
    r.text << "\n";
  }
  r.doc["levels"] = jlevels;
}

void report_orbifold(Report& r, const tck::SubfamilyParams& params) {
  const Quadruple q = tck::quadruple_of(params);
  const tck::OrbifoldSurface surface = tck::quotient_orbifold(params);
  const auto& level = surface.level;
  r.doc["p"] = {q.p1, q.p2, q.p3, q.p4};
  r.doc["k"] = params.k;
  r.doc["l"] = params.l;
  r.doc["j"] = params.j;
  r.doc["bundle"] = tck::to_string(params.bundle);
  r.doc["level"] = {
      {"g", level.g}, {"n", level.n}, {"m", level.m}, {"parity", tck::to_string(level.parity)}};
  r.doc["branchCoefficient"] = json_rational(surface.branch_coefficient);
  r.doc["canonicalClass"] = json_divisor_class(surface.canonical_class);
  r.doc["canonicalClassE0"] =
      json_divisor_class(tck::in_basis(surface.canonical_class, DivisorBasis::E0));
  r.doc["logDelPezzo"] = surface.log_del_pezzo;
  r.doc["symplecticClass"] = json_divisor_class(surface.symplectic_class);
  r.doc["exceptionalSphere"] = tck::exceptional_sphere_test(level);
  const Rational chern_fiber = tck::orbifold_chern_evaluation(surface, tck::fiber_class());
  r.doc["chernOnFiber"] = json_rational(chern_fiber);

  r.text << "p = " << q.str() << "   [k=" << params.k << " l=" << params.l << " j=" << params.j
         << ", " << tck::to_string(params.bundle) << "]\n";
  r.text << "g_" << params.j << " = " << level.g << ", n_" << params.j << " = " << level.n
         << ", m_" << params.j << " = " << level.m << "   (" << tck::to_string(level.parity)
         << " Hirzebruch surface)\n";
  if (surface.branch_coefficient.is_zero())
    r.text << "quotient: (S_" << level.n << ", empty), trivial orbifold\n";
  else
    r.text << "quotient: (S_" << level.n << ", Delta_" << level.m << "), branch coefficient "
           << surface.branch_coefficient.str() << "\n";
  r.text << "K_orb = " << class_text(surface.canonical_class) << " = "
         << class_text(tck::in_basis(surface.canonical_class, DivisorBasis::E0)) << "\n";
  r.text << "log del Pezzo: " << (surface.log_del_pezzo ? "yes" : "no") << "   (2m > n)\n";
  r.text << "[omega_{" << params.k << "," << params.l << "," << level.g
         << "}] = " << class_text(surface.symplectic_class) << "\n";
  r.text << "<c1_orb, L> = " << chern_fiber.str() << "\n";
}

void report_spectrum(Report& r, std::int64_t p1, std::int64_t p2, std::int64_t k2,
                     std::int64_t bound, const std::string& capping,
                     std::optional<std::int64_t> novikov = std::nullopt) {
  tck::Spectrum spectrum;
  if (capping == "fiber") {
    spectrum = tck::enumerate_spectrum(p1, p2, k2, bound);
  } else if (capping == "section") {
    spectrum = tck::enumerate_spectrum(
        p1, p2, k2, bound,
        DivisorClass{Rational(1), Rational(0), DivisorBasis::E0, tck::kAnySurface});
  } else {
    throw std::domain_error("capping must be 'fiber' or 'section', got '" + capping + "'");
  }
  r.doc["p"] = {spectrum.p1, spectrum.p2, spectrum.k2, spectrum.k2};
  r.doc["degreeBound"] = spectrum.degree_bound;
  r.doc["capping"] = capping;
  if (novikov) r.doc["novikovChern"] = *novikov;
  json gens = json::array();
  for (const auto& g : spectrum.generators) {
    json entry = {{"stratum", tck::to_string(g.stratum)},
                  {"m", g.multiplicity},
                  {"critical", tck::to_string(g.critical)},
                  {"rsIndex", g.rs_index},
                  {"grading", g.grading},
                  {"action", json_rational(g.action)}};
    if (novikov) entry["shiftedGrading"] = tck::novikov_shift(g.grading, *novikov);
    gens.push_back(entry);
  }
  r.doc["generators"] = gens;
  json counts = json::array();
  for (const auto& [degree, count] : spectrum.counts_by_degree)
    counts.push_back({{"degree", degree}, {"count", count}});
  r.doc["countsByDegree"] = counts;
  r.doc["count"] = spectrum.generators.size();

  r.text << "census of (" << spectrum.p1 << "," << spectrum.p2 << "," << spectrum.k2 << ","
         << spectrum.k2 << ")   bound " << spectrum.degree_bound << ", capping " << capping << "\n";
  r.text << "stratum   m   action   mu_RS   grading   type";
  if (novikov) r.text << "   shifted(<c1,A> = " << *novikov << ")";
  r.text << "\n";
  for (const auto& g : spectrum.generators) {
    r.text << tck::to_string(g.stratum) << "   " << g.multiplicity << "   " << g.action.str()
           << "   " << g.rs_index << "   " << g.grading << "   " << tck::to_string(g.critical);
    if (novikov) r.text << "   " << tck::novikov_shift(g.grading, *novikov);
    r.text << "\n";
  }
  r.text << "census size: " << spectrum.generators.size() << "   (count invariant p1+p2-1 = "
         << spectrum.p1 + spectrum.p2 - 1 << " at degree window " << spectrum.degree_bound
         << ")\n";
}

void report_equiv(Report& r, const Quadruple& a, const Quadruple& b,
                  tck::EquivalencePolicy policy) {
  const auto verdict = tck::decide_equivalence(a, b, policy);
  r.doc["a"] = {a.p1, a.p2, a.p3, a.p4};
  r.doc["b"] = {b.p1, b.p2, b.p3, b.p4};
  r.doc["policy"] =
      policy == tck::EquivalencePolicy::StrictParity ? "strict-parity" : "matching-gcd";
  r.doc["outcome"] = tck::to_string(verdict.outcome);
  r.doc["rule"] = verdict.rule;
  r.doc["note"] = verdict.note;
  r.text << "D_" << a.str() << " vs D_" << b.str() << ": " << tck::to_string(verdict.outcome)
         << "   [rule " << verdict.rule << "]\n";
  r.text << "note: " << verdict.note << "\n";
}

void report_spectrum_for(Report& r, std::int64_t p1, std::int64_t p2, std::int64_t k2,
                         std::int64_t bound);

void report_ypq(Report& r, std::int64_t p, std::int64_t q, bool with_spectrum) {
  const Quadruple quad = tck::ypq_to_quadruple({p, q});
  const std::int64_t invariant = tck::count_low_degree(quad.p1, quad.p2);
  const std::int64_t bound = 2 * (quad.p1 + quad.p2 + 1);
  r.doc["ypq"] = {{"p", p}, {"q", q}};
  r.doc["p"] = {quad.p1, quad.p2, quad.p3, quad.p4};
  r.doc["c1"] = tck::first_chern_coefficient(quad);
  r.doc["invariant"] = invariant;
  r.doc["degreeBound"] = bound;
  r.text << "Y^{" << p << "," << q << "} = D_" << quad.str() << "\n";
  r.text << "c1 = " << tck::first_chern_coefficient(quad) << ", manifold "
         << tck::to_string(tck::manifold_type(quad)) << "\n";
  r.text << "generator-count invariant (degree window " << bound << "): " << invariant << "\n";
  if (with_spectrum) report_spectrum_for(r, quad.p1, quad.p2, quad.p3, bound);
}

void report_spectrum_for(Report& r, std::int64_t p1, std::int64_t p2, std::int64_t k2,
                         std::int64_t bound) {
  Report inner;
  report_spectrum(inner, p1, p2, k2, bound, "fiber");
  r.doc["spectrum"] = inner.doc;
  r.text << inner.text.str();
}

void report_regular(Report& r, std::int64_t k, std::int64_t c, std::int64_t N) {
  const auto g = tck::regular_case_gradings(k, c, N);
  r.doc["k"] = k;
  r.doc["c"] = c;
  r.doc["N"] = N;
  r.doc["m"] = g.m;
  r.doc["x"] = g.x;
  r.doc["y"] = g.y;
  r.doc["gradings"] = {
      {"max", g.max_grading}, {"saddle", g.saddle_grading}, {"min", g.min_grading}};
  r.text << "(" << k << "," << k << "," << k - c << "," << k - c << "):   c1 = 2c = " << 2 * c
         << ", m = " << g.m << ", x = " << g.x << ", y = " << g.y << "\n";
  r.text << "action N = " << N << " gradings: max " << g.max_grading << ", saddles "
         << g.saddle_grading << ", min " << g.min_grading << "\n";
}

void report_polytope(Report& r, std::int64_t k, std::int64_t i, std::int64_t n, std::int64_t m,
                     const std::optional<std::string>& svg_path) {
  const auto t = tck::build_trapezoid(k, i, n, m);
  r.doc["trapezoid"] = json::parse(tck::trapezoid_to_json(t));
  const auto graph = tck::karshon_graph_of(t);
  json heights = json::array();
  for (const auto& h : graph.fixed_heights) heights.push_back(json_rational(h));
  json spheres = json::array();
  for (const auto& s : graph.spheres)
    spheres.push_back({{"height", json_rational(s.height)}, {"label", s.label}});
  r.doc["karshonGraph"] = {{"fixedHeights", heights}, {"spheres", spheres}};
  r.text << "trapezoid for (S_" << n << ", Delta_" << m << ") at level i = " << i << ", k = " << k
         << "\n";
  r.text << "vertices: ";
  for (std::size_t a = 0; a < t.vertices.size(); ++a) {
    if (a > 0) r.text << ", ";
    r.text << "(" << t.vertices[a].x.str() << "," << t.vertices[a].y.str() << ")";
  }
  r.text << "\n";
  r.text << "vertical edge label m = " << t.edge_label << ", slanted edge slope " << t.slope
         << "\n";
  r.text << "json: " << tck::trapezoid_to_json(t) << "\n";
  if (svg_path) {
    std::ofstream out(*svg_path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open '" + *svg_path + "' for writing");
    out << tck::trapezoid_to_svg(t);
    r.doc["svg"] = *svg_path;
    r.text << "svg written to " << *svg_path << "\n";
  }
}

void report_phi_table(Report& r, std::int64_t max) {
  if (max < 2) throw std::domain_error("phi-table requires --max >= 2");
  json rows = json::array();
  for (std::int64_t n = 2; n <= max; ++n) {
    const std::int64_t phi = tck::euler_phi(n);
    rows.push_back({{"n", n}, {"phi", phi}});
    r.text << "phi(" << n << ") = " << phi << "\n";
  }
  r.doc["max"] = max;
  r.doc["phi"] = rows;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("TCK_MAX_INT")) {
    try {
      tck::set_input_cap(parse_integer(cap, "TCK_MAX_INT"));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App app{"toric contact structures on S^3-bundles over S^2"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string p_text, a_text, b_text, cone_text, policy_text = "strict", bundle_text = "trivial";
  std::string capping = "fiber", svg_path;
  std::int64_t k = 0, l = 0, j = 0, i = 0, n = -1, m = 1, c = 0, N = 1, p1 = 0, p2 = 0, k2 = 0;
  std::int64_t ypq_p = 0, ypq_q = 0, bound = -1, max = 0;
  bool with_spectrum = false;

  auto* cmd_admissible = app.add_subcommand("admissible", "check the gcd conditions");
  cmd_admissible->add_option("--p", p_text, "quadruple p1,p2,p3,p4")->required();

  auto* cmd_invariants = app.add_subcommand("invariants", "c1, manifold type, Y^{p,q} form");
  cmd_invariants->add_option("--p", p_text, "quadruple p1,p2,p3,p4")->required();
  cmd_invariants->add_option("--cone", cone_text, "test a Reeb candidate a1,a2,a3,a4 (rationals)");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "admissible set and gcd level sets");
  cmd_enumerate->add_option("--k", k, "k")->required();
  cmd_enumerate->add_option("--l", l, "l")->required();
  cmd_enumerate->add_option("--bundle", bundle_text, "trivial or nontrivial");

  auto* cmd_orbifold = app.add_subcommand("orbifold", "quotient orbifold Hirzebruch surface");
  cmd_orbifold->add_option("--k", k, "k");
  cmd_orbifold->add_option("--l", l, "l");
  cmd_orbifold->add_option("--j", j, "j");
  cmd_orbifold->add_option("--bundle", bundle_text, "trivial or nontrivial");
  cmd_orbifold->add_option("--p", p_text, "subfamily quadruple p1,p2,l,l instead of k/l/j");

  auto* cmd_spectrum = app.add_subcommand("spectrum", "contact-homology generator census");
  cmd_spectrum->add_option("--p", p_text, "subfamily quadruple p1,p2,l,l");
  cmd_spectrum->add_option("--p1", p1, "first weight");
  cmd_spectrum->add_option("--p2", p2, "second weight");
  cmd_spectrum->add_option("--k2", k2, "joined weight l = k2");
  cmd_spectrum->add_option("--bound", bound, "degree window (default 2(p1+p2+1))");
  cmd_spectrum->add_option("--capping", capping, "dense capping class: fiber or section")
      ->capture_default_str();
  std::int64_t novikov_chern = 0;
  bool novikov_set = false;
  cmd_spectrum->add_option("--novikov", novikov_chern,
                           "also report gradings shifted by a Novikov element with this <c1, A>")
      ->each([&novikov_set](const std::string&) { novikov_set = true; });

  auto* cmd_equiv = app.add_subcommand("equiv", "decide contact equivalence");
  cmd_equiv->add_option("--a", a_text, "first quadruple")->required();
  cmd_equiv->add_option("--b", b_text, "second quadruple")->required();
  cmd_equiv->add_option("--policy", policy_text, "strict or gcd")
      ->check(CLI::IsMember({"strict", "gcd"}))
      ->capture_default_str();

  auto* cmd_ypq = app.add_subcommand("ypq", "Y^{p,q} bridge and invariant");
  cmd_ypq->add_option("--p", ypq_p, "p")->required();
  cmd_ypq->add_option("--q", ypq_q, "q")->required();
  cmd_ypq->add_flag("--spectrum", with_spectrum, "include the generator census");

  auto* cmd_regular = app.add_subcommand("regular", "regular-case gradings for (k,k,k-c,k-c)");
  cmd_regular->add_option("--k", k, "k")->required();
  cmd_regular->add_option("--c", c, "c")->required();
  cmd_regular->add_option("--N", N, "action")->capture_default_str();

  auto* cmd_polytope = app.add_subcommand("polytope", "labeled Hirzebruch trapezoid");
  cmd_polytope->add_option("--k", k, "height parameter k")->required();
  cmd_polytope->add_option("--i", i, "level / width i")->required();
  cmd_polytope->add_option("--n", n, "surface index n")->required();
  cmd_polytope->add_option("--m", m, "vertical edge label m")->capture_default_str();
  cmd_polytope->add_option("--svg", svg_path, "write an SVG drawing to this path");

  auto* cmd_phi = app.add_subcommand("phi-table", "Euler phi table");
  cmd_phi->add_option("--max", max, "largest argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report;
  report.doc["schemaVersion"] = kSchemaVersion;

  try {
    if (cmd_admissible->parsed()) {
      report.doc["command"] = "admissible";
      report_admissible(report, parse_quadruple(p_text));
    } else if (cmd_invariants->parsed()) {
      report.doc["command"] = "invariants";
      report_invariants(report, parse_quadruple(p_text),
                        cone_text.empty() ? std::nullopt : std::optional<std::string>(cone_text));
    } else if (cmd_enumerate->parsed()) {
      report.doc["command"] = "enumerate";
      report_enumerate(report, k, l, parse_bundle(bundle_text));
    } else if (cmd_orbifold->parsed()) {
      report.doc["command"] = "orbifold";
      tck::SubfamilyParams params;
      if (!p_text.empty()) {
        const Quadruple q = parse_quadruple(p_text);
        if (q.p3 != q.p4) throw std::domain_error("orbifold --p requires the shape (p1,p2,l,l)");
        const std::int64_t sum = q.p1 + q.p2;
        params.bundle = sum % 2 == 0 ? ManifoldType::TrivialBundle : ManifoldType::NontrivialBundle;
        params.k = sum % 2 == 0 ? sum / 2 : (sum - 1) / 2;
        params.l = q.p3;
        params.j = std::min(q.p1, q.p2);
      } else {
        if (k < 1 || l < 1 || j < 1) throw std::domain_error("orbifold needs --k, --l, --j (or --p)");
        params = {k, l, j, parse_bundle(bundle_text)};
      }
      report_orbifold(report, params);
    } else if (cmd_spectrum->parsed()) {
      report.doc["command"] = "spectrum";
      if (!p_text.empty()) {
        const Quadruple q = parse_quadruple(p_text);
        if (q.p3 != q.p4) throw std::domain_error("spectrum --p requires the shape (p1,p2,l,l)");
        p1 = q.p1;
        p2 = q.p2;
        k2 = q.p3;
      }
      if (p1 < 1 || p2 < 1 || k2 < 1)
        throw std::domain_error("spectrum needs --p or all of --p1, --p2, --k2");
      if (bound < 0) bound = 2 * (p1 + p2 + 1);
      report_spectrum(report, p1, p2, k2, bound, capping,
                      novikov_set ? std::optional<std::int64_t>(novikov_chern) : std::nullopt);
    } else if (cmd_equiv->parsed()) {
      report.doc["command"] = "equiv";
      report_equiv(report, parse_quadruple(a_text), parse_quadruple(b_text),
                   policy_text == "gcd" ? tck::EquivalencePolicy::MatchingGcd
                                          : tck::EquivalencePolicy::StrictParity);
    } else if (cmd_ypq->parsed()) {
      report.doc["command"] = "ypq";
      report_ypq(report, ypq_p, ypq_q, with_spectrum);
    } else if (cmd_regular->parsed()) {
      report.doc["command"] = "regular";
      report_regular(report, k, c, N);
    } else if (cmd_polytope->parsed()) {
      report.doc["command"] = "polytope";
      report_polytope(report, k, i, n, m,
                      svg_path.empty() ? std::nullopt : std::optional<std::string>(svg_path));
    } else if (cmd_phi->parsed()) {
      report.doc["command"] = "phi-table";
      report_phi_table(report, max);
    }
  } catch (const tck::internal_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "json")
    std::cout << report.doc.dump(2) << "\n";
  else
    std::cout << report.text.str();
  return 0;
}
