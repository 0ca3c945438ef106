#include "genus2.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "genus2/errors.hpp"
#include "genus2/json_io.hpp"

using namespace g2;

struct g2_form {
  BinaryForm form;
};

namespace {

thread_local std::string t_last_error;

g2_status status_of(Err code) {
  switch (code) {
    case Err::Parse:
      return G2_PARSE;
    case Err::Internal:
    case Err::RankDeficient:
    case Err::VerificationFailed:
      return G2_INTERNAL;
    default:
      return G2_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, routing exceptions into statuses + the thread-local message.
template <typename Fn>
g2_status guarded(Fn&& fn) {
  try {
    fn();
    return G2_OK;
  } catch (const G2Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return G2_INTERNAL;
  }
}

template <typename Fn>
g2_status emit_json(char** out, Fn&& fn) {
  if (out == nullptr) {
    t_last_error = "null output pointer";
    return G2_INTERNAL;
  }
  return guarded([&] { *out = dup_string(dump_json(fn())); });
}

template <typename Fn>
g2_status emit_form(g2_form** out, Fn&& fn) {
  if (out == nullptr) {
    t_last_error = "null output pointer";
    return G2_INTERNAL;
  }
  return guarded([&] { *out = new g2_form{fn()}; });
}

const BinaryForm& deref(const g2_form* f) {
  if (f == nullptr) fail(Err::Internal, "null form handle");
  return f->form;
}

}  // namespace

extern "C" {

const char* g2_version(void) { return "1.0.0"; }

const char* g2_last_error(void) { return t_last_error.c_str(); }

void g2_string_free(char* s) { std::free(s); }

void g2_form_free(g2_form* f) { delete f; }

g2_status g2_form_parse_raw(const char* csv, g2_form** out) {
  return emit_form(out, [&] { return parse_form_raw(csv ? csv : ""); });
}

g2_status g2_form_parse_classical(const char* csv, g2_form** out) {
  return emit_form(out, [&] { return parse_form_classical(csv ? csv : ""); });
}

g2_status g2_form_from_roots(const char* roots_csv, const char* leading, g2_form** out) {
  return emit_form(out, [&] {
    return parse_form_roots(roots_csv ? roots_csv : "", leading ? leading : "1");
  });
}

g2_status g2_act(const g2_form* f, const char* matrix_csv, g2_form** out) {
  return emit_form(out, [&] {
    return act(parse_matrix(matrix_csv ? matrix_csv : ""), deref(f));
  });
}

g2_status g2_bielliptic_construct(const char* alphas_csv, g2_form** out) {
  return emit_form(out, [&] {
    std::vector<Rat> a = parse_rat_csv(alphas_csv ? alphas_csv : "", 3);
    return bielliptic_form(a[0], a[1], a[2]);
  });
}

g2_status g2_form_json(const g2_form* f, char** out) {
  return emit_json(out, [&] { return form_json(deref(f)); });
}

g2_status g2_invariants(const g2_form* f, char** out) {
  return emit_json(out, [&] { return invariants_json(invariants_of(deref(f))); });
}

g2_status g2_classify(const g2_form* f, char** out) {
  return emit_json(out, [&] { return classify_json(multiplicity_profile(deref(f))); });
}

g2_status g2_moduli_point(const g2_form* f, char** out) {
  return emit_json(out, [&] { return moduli_point_json(moduli_point(deref(f))); });
}

g2_status g2_stable_model(const g2_form* f, char** out) {
  return emit_json(out, [&] { return stable_model_json(stable_model(deref(f))); });
}

g2_status g2_igusa_coords(const g2_form* f, char** out) {
  return emit_json(out, [&] { return igusa_json(igusa_local_coords(invariants_of(deref(f)))); });
}

g2_status g2_involutions(const g2_form* f, char** out) {
  return emit_json(out, [&] { return involutions_json(involutions_rational(deref(f))); });
}

g2_status g2_is_bielliptic(const g2_form* f, char** out) {
  return emit_json(out, [&] { return bielliptic_json(is_bielliptic(deref(f))); });
}

g2_status g2_equivalent(const g2_form* f, const g2_form* g, char** out) {
  return emit_json(out, [&] { return equivalent_json(same_curve(deref(f), deref(g))); });
}

g2_status g2_derive_relation(int samples, uint64_t seed, char** text_out, char** json_out) {
  if (text_out == nullptr || json_out == nullptr) {
    t_last_error = "null output pointer";
    return G2_INTERNAL;
  }
  return guarded([&] {
    RelationPolynomial g = derive_relation_G(samples, seed);
    *text_out = dup_string(g.to_text());
    *json_out = dup_string(dump_json(relation_summary_json(g, samples, seed)));
  });
}

g2_status g2_divisor_nef(const char* q0, const char* q1, char** out) {
  return emit_json(out, [&] {
    return nef_json(is_nef({parse_rat(q0 ? q0 : ""), parse_rat(q1 ? q1 : "")}));
  });
}

g2_status g2_divisor_ample(const char* q0, const char* q1, char** out) {
  return emit_json(out, [&] {
    return ample_json(is_ample({parse_rat(q0 ? q0 : ""), parse_rat(q1 ? q1 : "")}));
  });
}

g2_status g2_divisor_slope(const char* a, const char* b, char** out) {
  return emit_json(out, [&] {
    return slope_json(slope_nef_test(parse_rat(a ? a : ""), parse_rat(b ? b : "")));
  });
}

g2_status g2_log_model(const char* alpha, char** out) {
  return emit_json(out, [&] { return log_model_json(log_model(parse_rat(alpha ? alpha : ""))); });
}

g2_status g2_divisor_identities(char** out) {
  return emit_json(out, [&] { return identities_json(check_divisor_identities()); });
}

g2_status g2_reid_tai(long n, const char* weights_csv, char** out) {
  return emit_json(out, [&] {
    std::vector<long> w;
    for (const std::string& f : split_csv(weights_csv ? weights_csv : "")) {
      Rat q = parse_rat(f);
      if (!is_integer(q) || !num(q).fits_slong_p())
        fail(Err::Parse, "weight '" + f + "' is not a small integer");
      w.push_back(num(q).get_si());
    }
    return reid_tai_json(reid_tai(n, w), reid_tai_ages(n, w));
  });
}

g2_status g2_wps_degree(const char* weights_csv, const char* hypersurface_degree_or_null,
                        char** out) {
  return emit_json(out, [&] {
    std::vector<long> w;
    for (const std::string& f : split_csv(weights_csv ? weights_csv : "")) {
      Rat q = parse_rat(f);
      if (!is_integer(q) || !num(q).fits_slong_p())
        fail(Err::Parse, "weight '" + f + "' is not a small integer");
      w.push_back(num(q).get_si());
    }
    std::optional<long> hdeg;
    if (hypersurface_degree_or_null != nullptr) {
      Rat q = parse_rat(hypersurface_degree_or_null);
      if (!is_integer(q) || !num(q).fits_slong_p())
        fail(Err::Parse, "hypersurface degree is not a small integer");
      hdeg = num(q).get_si();
    }
    return wps_degree_json(wps_canonical_degree(w, hdeg));
  });
}

}  // extern "C"
