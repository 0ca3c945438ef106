#pragma once
// Text and JSON plumbing shared by the shared-library surface and the CLI:
// comma-separated rational parsing with positional error messages, and
// deterministic JSON rendering of every result type (rationals as "p/q"
// strings, object keys in fixed order).

#include <json.hpp>

#include <string>
#include <vector>

#include "genus2/binary_form.hpp"
#include "genus2/divisors.hpp"
#include "genus2/invariants.hpp"
#include "genus2/moduli.hpp"
#include "genus2/relation.hpp"

namespace g2 {

using Json = nlohmann::ordered_json;

// Splits on ',' (no escaping); empty fields are parse errors.
std::vector<std::string> split_csv(const std::string& s);

// Parses exactly n comma-separated rationals; errors name the 1-based
// position of the offending entry.
std::vector<Rat> parse_rat_csv(const std::string& s, int n);

BinaryForm parse_form_raw(const std::string& csv);        // c0..c6
BinaryForm parse_form_classical(const std::string& csv);  // a..g
// roots: six entries, each a rational or "inf"; leading: nonzero rational.
BinaryForm parse_form_roots(const std::string& roots_csv, const std::string& leading);
Matrix2 parse_matrix(const std::string& csv);  // m11,m12,m21,m22

Json form_json(const BinaryForm& form);                    // {"raw": [...]}
Json invariants_json(const InvariantVector& inv);          // {"A": ..., "E": ...}
Json classify_json(const MultiplicityProfile& profile);    // stability + profile
Json moduli_point_json(const ModuliPoint& p);
Json stable_model_json(const StableModelInfo& info);
Json igusa_json(const std::array<Rat, 3>& coords);
Json involutions_json(const std::vector<Involution>& invs);
Json bielliptic_json(bool yes);
Json equivalent_json(bool yes);
Json nef_json(bool yes);
Json ample_json(bool yes);
Json slope_json(bool nef);
Json log_model_json(const LogModelResult& r);
Json identities_json(const std::vector<IdentityCheck>& checks);
Json reid_tai_json(bool canonical, const std::vector<Rat>& ages);
Json wps_degree_json(long degree);
Json relation_summary_json(const RelationPolynomial& g, int samples, uint64_t seed);

// Single-line dump (no trailing newline); the byte format frozen by the
// golden transcripts.
std::string dump_json(const Json& j);

}  // namespace g2
