#include "genus2/json_io.hpp"

#include "genus2/errors.hpp"

namespace g2 {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<Rat> parse_rat_csv(const std::string& s, int n) {
  std::vector<std::string> fields = split_csv(s);
  if (static_cast<int>(fields.size()) != n)
    fail(Err::Parse, "expected " + std::to_string(n) + " comma-separated values, got " +
                         std::to_string(fields.size()));
  std::vector<Rat> out;
  for (int i = 0; i < n; ++i) {
    try {
      out.push_back(parse_rat(fields[i]));
    } catch (const G2Error& e) {
      fail(Err::Parse, "entry " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

BinaryForm parse_form_raw(const std::string& csv) {
  std::vector<Rat> c = parse_rat_csv(csv, 7);
  return form_from_raw({c[0], c[1], c[2], c[3], c[4], c[5], c[6]});
}

BinaryForm parse_form_classical(const std::string& csv) {
  std::vector<Rat> c = parse_rat_csv(csv, 7);
  BinaryForm f{c[0], c[1], c[2], c[3], c[4], c[5], c[6]};
  if (f.is_zero()) fail(Err::AllZero, "zero form");
  return f;
}

BinaryForm parse_form_roots(const std::string& roots_csv, const std::string& leading) {
  std::vector<std::string> fields = split_csv(roots_csv);
  if (fields.size() != 6)
    fail(Err::Parse, "expected 6 roots, got " + std::to_string(fields.size()));
  RootSpec spec;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == "inf") {
      ++spec.infinity_multiplicity;
      continue;
    }
    try {
      spec.finite_roots.push_back(parse_rat(fields[i]));
    } catch (const G2Error& e) {
      fail(Err::Parse, "root " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  spec.leading = parse_rat(leading);
  if (spec.leading == 0) fail(Err::LeadingCoefficientZero, "leading coefficient must be nonzero");
  return form_from_roots(spec);
}

Matrix2 parse_matrix(const std::string& csv) {
  std::vector<Rat> m = parse_rat_csv(csv, 4);
  return {m[0], m[1], m[2], m[3]};
}

namespace {

Json rat_json(const Rat& q) { return to_string(q); }

Json rat_array(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const Rat& q : v) arr.push_back(rat_json(q));
  return arr;
}

}  // namespace

Json form_json(const BinaryForm& form) {
  Json arr = Json::array();
  for (const Rat& c : form.raw()) arr.push_back(rat_json(c));
  return Json{{"raw", arr}};
}

Json invariants_json(const InvariantVector& inv) {
  return Json{{"A", rat_json(inv.A)},
              {"B", rat_json(inv.B)},
              {"C", rat_json(inv.C)},
              {"D", rat_json(inv.D)},
              {"E", rat_json(inv.E)}};
}

Json classify_json(const MultiplicityProfile& profile) {
  Json prof = Json::array();
  for (int m : profile) prof.push_back(m);
  return Json{{"stability", to_string(classify_stability(profile))}, {"profile", prof}};
}

Json moduli_point_json(const ModuliPoint& p) {
  switch (p.kind) {
    case ModuliPoint::Kind::InteriorOrNodal: {
      Json coords = Json::array();
      for (const Rat& c : p.point.coords) coords.push_back(rat_json(c));
      return Json{{"type", "point"}, {"coords", coords}};
    }
    case ModuliPoint::Kind::SpecialPointP:
      return Json{{"type", "p"}};
    default:
      return Json{{"type", "undefined"}};
  }
}

Json stable_model_json(const StableModelInfo& info) {
  return Json{{"nodes", info.node_count}, {"model", to_string(info.kind)}};
}

Json igusa_json(const std::array<Rat, 3>& coords) {
  return Json{{"coords", rat_array({coords[0], coords[1], coords[2]})}};
}

Json involutions_json(const std::vector<Involution>& invs) {
  Json arr = Json::array();
  for (const Involution& inv : invs) {
    Json orbits = Json::array();
    for (const auto& p : inv.orbit_pairs) orbits.push_back(Json::array({p[0], p[1]}));
    arr.push_back(Json{{"matrix", rat_array({inv.m.m11, inv.m.m12, inv.m.m21, inv.m.m22})},
                       {"bielliptic", inv.bielliptic},
                       {"orbits", orbits}});
  }
  return Json{{"count", static_cast<int>(invs.size())}, {"involutions", arr}};
}

Json bielliptic_json(bool yes) { return Json{{"bielliptic", yes}}; }
Json equivalent_json(bool yes) { return Json{{"equivalent", yes}}; }
Json nef_json(bool yes) { return Json{{"nef", yes}}; }
Json ample_json(bool yes) { return Json{{"ample", yes}}; }
Json slope_json(bool nef) { return Json{{"nef", nef}}; }

Json log_model_json(const LogModelResult& r) {
  std::string note;
  switch (r.model) {
    case LogModelResult::Model::ModuliSpace: note = "moduli of stable curves"; break;
    case LogModelResult::Model::InvariantQuotientX: note = "P(1,2,3,5)"; break;
    case LogModelResult::Model::SinglePoint: note = "everything collapses"; break;
    default: note = "log canonical divisor not effective"; break;
  }
  Json j{{"model", to_string(r.model)}, {"note", note}};
  if (r.at_upper_threshold) j["boundary"] = "9/11";
  if (r.at_lower_threshold) j["boundary"] = "7/10";
  return j;
}

Json identities_json(const std::vector<IdentityCheck>& checks) {
  Json arr = Json::array();
  for (const IdentityCheck& c : checks)
    arr.push_back(Json{{"identity", c.identity},
                       {"status", c.pass ? "pass" : "fail"},
                       {"detail", c.detail}});
  return arr;
}

Json reid_tai_json(bool canonical, const std::vector<Rat>& ages) {
  return Json{{"canonical", canonical}, {"ages", rat_array(ages)}};
}

Json wps_degree_json(long degree) { return Json{{"degree", degree}}; }

Json relation_summary_json(const RelationPolynomial& g, int samples, uint64_t seed) {
  return Json{{"basis_size", static_cast<int>(relation_monomial_basis().size())},
              {"terms", static_cast<int>(g.coefficients.size())},
              {"samples", samples},
              {"seed", seed}};
}

std::string dump_json(const Json& j) { return j.dump(); }

}  // namespace g2
