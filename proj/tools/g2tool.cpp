// Command-line front end; all mathematics goes through the C interface.
#include <genus2.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct ExitWith {
  int code;
};

[[noreturn]] void die(g2_status st) {
  std::fprintf(stderr, "error: %s\n", g2_last_error());
  throw ExitWith{st == G2_PARSE ? 2 : st == G2_DOMAIN ? 3 : 4};
}

void check(g2_status st) {
  if (st != G2_OK) die(st);
}

// Owned JSON string from the library.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { g2_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OwnedForm {
  g2_form* p = nullptr;
  ~OwnedForm() { g2_form_free(p); }
};

struct FormOpts {
  std::string form, roots, leading = "1";
  bool classical = false;
};

void add_form_opts(CLI::App* cmd, FormOpts& o, const std::string& prefix = "") {
  auto dash = "--" + prefix;
  auto* f = cmd->add_option(dash + "form", o.form,
                            "seven raw coefficients c0..c6 of x^(6-k) y^k");
  auto* r = cmd->add_option(dash + "roots", o.roots, "six roots (rationals or 'inf')");
  cmd->add_option(dash + "leading", o.leading, "leading scalar for " + dash + "roots")
      ->needs(r);
  f->excludes(r);
  r->excludes(f);
}

void make_form(const FormOpts& o, OwnedForm& out) {
  if (!o.form.empty() && !o.roots.empty()) {
    std::fprintf(stderr, "error: give either coefficients or roots, not both\n");
    throw ExitWith{2};
  }
  if (!o.roots.empty()) {
    check(g2_form_from_roots(o.roots.c_str(), o.leading.c_str(), &out.p));
  } else if (!o.form.empty()) {
    check(o.classical ? g2_form_parse_classical(o.form.c_str(), &out.p)
                      : g2_form_parse_raw(o.form.c_str(), &out.p));
  } else {
    std::fprintf(stderr, "error: no input form (use --form or --roots)\n");
    throw ExitWith{2};
  }
}

void emit(const std::string& json) { std::cout << json << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"exact invariants, moduli points and divisor classes of binary sextics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", g2_version());

  FormOpts fo;
  bool classical = false;

  auto* inv = app.add_subcommand("invariants", "the five generating invariants A,B,C,D,E");
  auto* cls = app.add_subcommand("classify", "stability class and multiplicity profile");
  auto* mod = app.add_subcommand("moduli-point", "canonical point of P(1,2,3,5)");
  auto* stm = app.add_subcommand("stable-model", "topology of the stable limit curve");
  auto* eqv = app.add_subcommand("equivalent", "whether two stable sextics give the same curve");
  auto* actc = app.add_subcommand("act", "substitute a rational 2x2 matrix");
  auto* bie = app.add_subcommand("bielliptic", "test for an extra involution, or construct one");
  auto* invol = app.add_subcommand("involutions", "rational involutions permuting the roots");
  auto* igusa = app.add_subcommand("igusa-coords", "local coordinates where A is invertible");
  auto* derg = app.add_subcommand("derive-g", "fit the weight-30 relation with E^2 = G(A,B,C,D)");
  auto* divisor = app.add_subcommand("divisor", "divisor-class computations on the moduli space");
  divisor->require_subcommand(1);

  for (CLI::App* cmd : {inv, cls, mod, stm, eqv, actc, invol, igusa})
    add_form_opts(cmd, fo);
  for (CLI::App* cmd : {inv, cls, mod, stm, eqv, actc, invol, igusa, bie})
    cmd->add_flag("--classical", classical, "read coefficients as classical a..g");

  FormOpts other;
  add_form_opts(eqv, other, "other-");

  std::string matrix;
  actc->add_option("--matrix", matrix, "m11,m12,m21,m22 (row-major, det nonzero)")->required();

  FormOpts bie_fo;
  std::string construct;
  add_form_opts(bie, bie_fo);
  bie->add_option("--construct", construct,
                  "a1,a2,a3: branch points {a_i, 1/a_i} with the swap involution");

  int samples = 60;
  std::uint64_t seed = 0;
  std::string out_path;
  derg->add_option("--samples", samples, "number of fitting samples (>= 47)");
  derg->add_option("--seed", seed, "PRNG seed")->required();
  derg->add_option("--out", out_path, "path for the monomial table")->required();

  std::string cls0, cls1, slope_a, slope_b, alpha, weights, hdeg;
  long rt_n = 0;
  auto* dnef = divisor->add_subcommand("nef", "closed-cone membership");
  auto* damp = divisor->add_subcommand("ample", "open-cone membership");
  for (CLI::App* cmd : {dnef, damp}) {
    cmd->add_option("--d0", cls0, "coefficient of the irreducible boundary divisor")->required();
    cmd->add_option("--d1", cls1, "coefficient of the elliptic boundary divisor")->required();
  }
  auto* dslope = divisor->add_subcommand("slope", "nef test for a*lambda - b*delta");
  dslope->add_option("--a", slope_a)->required();
  dslope->add_option("--b", slope_b)->required();
  auto* dlog = divisor->add_subcommand("log-model", "log canonical model at level alpha");
  dlog->add_option("--alpha", alpha)->required();
  divisor->add_subcommand("identities", "replay the divisor-class bookkeeping");
  auto* drt = divisor->add_subcommand("reid-tai", "canonicity of a cyclic quotient singularity");
  drt->add_option("--n", rt_n, "order of the cyclic group")->required();
  drt->add_option("--weights", weights, "action weights, comma-separated")->required();
  auto* dwps = divisor->add_subcommand("wps-degree", "canonical degree of a weighted P^n");
  dwps->add_option("--weights", weights, "positive weights, comma-separated")->required();
  dwps->add_option("--hypersurface", hdeg, "adjoin a hypersurface of this degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  fo.classical = classical;
  other.classical = classical;
  bie_fo.classical = classical;
  OwnedString js;

  if (*inv || *cls || *mod || *stm || *invol || *igusa) {
    OwnedForm f;
    make_form(fo, f);
    if (*inv) check(g2_invariants(f.p, &js.p));
    if (*cls) check(g2_classify(f.p, &js.p));
    if (*mod) check(g2_moduli_point(f.p, &js.p));
    if (*stm) check(g2_stable_model(f.p, &js.p));
    if (*invol) check(g2_involutions(f.p, &js.p));
    if (*igusa) check(g2_igusa_coords(f.p, &js.p));
    emit(js.str());
    if (*mod && nlohmann::json::parse(js.str()).value("type", "") == "undefined")
      return 3;
    return 0;
  }

  if (*eqv) {
    OwnedForm f, g;
    make_form(fo, f);
    make_form(other, g);
    check(g2_equivalent(f.p, g.p, &js.p));
    emit(js.str());
    return 0;
  }

  if (*actc) {
    OwnedForm f, moved;
    make_form(fo, f);
    check(g2_act(f.p, matrix.c_str(), &moved.p));
    check(g2_form_json(moved.p, &js.p));
    emit(js.str());
    return 0;
  }

  if (*bie) {
    OwnedForm f;
    if (!construct.empty()) {
      check(g2_bielliptic_construct(construct.c_str(), &f.p));
      check(g2_form_json(f.p, &js.p));
    } else {
      make_form(bie_fo, f);
      check(g2_is_bielliptic(f.p, &js.p));
    }
    emit(js.str());
    return 0;
  }

  if (*derg) {
    OwnedString text;
    check(g2_derive_relation(samples, seed, &text.p, &js.p));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot open '%s'\n", out_path.c_str());
      return 2;
    }
    out << text.str();
    emit(js.str());
    return 0;
  }

  if (*dnef) check(g2_divisor_nef(cls0.c_str(), cls1.c_str(), &js.p));
  if (*damp) check(g2_divisor_ample(cls0.c_str(), cls1.c_str(), &js.p));
  if (*dslope) check(g2_divisor_slope(slope_a.c_str(), slope_b.c_str(), &js.p));
  if (*dlog) check(g2_log_model(alpha.c_str(), &js.p));
  if (divisor->get_subcommand("identities")->parsed()) check(g2_divisor_identities(&js.p));
  if (*drt) check(g2_reid_tai(rt_n, weights.c_str(), &js.p));
  if (*dwps) check(g2_wps_degree(weights.c_str(), hdeg.empty() ? nullptr : hdeg.c_str(), &js.p));
  emit(js.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ExitWith& e) {
    return e.code;
  }
}
