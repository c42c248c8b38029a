#include "seqreg/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace seqreg {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> poly_strings(const std::vector<Poly>& ps, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.to_string(vars));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string bracketed(const std::vector<std::string>& parts) { return "[" + join(parts, ", ") + "]"; }

Json detail_json(const DetailValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string detail_text(const DetailValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const std::string* s = std::get_if<std::string>(&v)) return *s;
  return bracketed(std::get<std::vector<std::string>>(v));
}

std::string taint(bool certified) { return certified ? "certified" : "probabilistic"; }

Json verdict_json(const PropertyVerdict& v) {
  Json j;
  j["property"] = std::string(property_name(v.property));
  j["outcome"] = std::string(outcome_name(v.outcome));
  j["taint"] = taint(v.certified);
  j["message"] = v.message;
  Json d = Json::object();
  for (const auto& [k, val] : v.details) d[k] = detail_json(val);
  j["details"] = std::move(d);
  return j;
}

void verdict_text(std::ostringstream& os, const PropertyVerdict& v, const std::string& indent) {
  os << indent << property_name(v.property) << ": " << outcome_name(v.outcome) << " (" << taint(v.certified) << ")\n";
  if (!v.message.empty()) os << indent << "  " << v.message << "\n";
  for (const auto& [k, val] : v.details) os << indent << "  " << k << " = " << detail_text(val) << "\n";
}

TowerDocument kappa_document(const ResidueDGField& k) {
  TowerDocument kd;
  kd.spec = k.spec;
  kd.spec.set_label("residue DG-field");
  return kd;
}

Json kappa_json(const ResidueDGField& k) {
  Json j;
  TowerDocument kd = kappa_document(k);
  j["tower"] = format_tower(kd);
  j["parameters"] = poly_strings(k.parameters, k.spec.vars());
  j["amplitude"] = {{"inf", k.amplitude.inf}, {"sup", k.amplitude.sup}, {"amp", k.amplitude.amp()}};
  j["flat_dimension"] = k.flat_dimension;
  j["checks"] = {{"amplitude_matches", k.amplitude_matches},
                 {"h0_is_residue_field", k.h0_is_residue_field},
                 {"reduction_is_residue_field", k.reduction_is_residue_field},
                 {"flat_dimension_matches", k.flat_dimension_matches}};
  j["equivalence"] = "fingerprint";
  return j;
}

void kappa_text(std::ostringstream& os, const ResidueDGField& k) {
  const auto& vars = k.spec.vars();
  os << "  parameters: " << bracketed(poly_strings(k.parameters, vars)) << "\n";
  os << "  amplitude: " << k.amplitude.amp() << " (H^" << k.amplitude.inf << " .. H^" << k.amplitude.sup << ")\n";
  os << "  flat dimension: " << k.flat_dimension << "\n";
  os << "  amp(kappa) = amp(A): " << (k.amplitude_matches ? "yes" : "no") << "\n";
  os << "  H^0(kappa) is the residue field: " << (k.h0_is_residue_field ? "yes" : "no") << "\n";
  os << "  K(H^0(A); parameters) is the residue field in degree 0: "
     << (k.reduction_is_residue_field ? "yes" : "no") << "\n";
  os << "  flat dimension = local dimension: " << (k.flat_dimension_matches ? "yes" : "no") << "\n";
}

std::string hash_polys(const std::vector<Poly>& ps, const std::vector<std::string>& vars) {
  return fnv1a_hex(join(poly_strings(ps, vars), ";"));
}

std::string seconds_string(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TowerReport run_report(const TowerDocument& doc, const RegularityOptions& opts) {
  TowerReport r;
  r.doc = doc;
  r.seed = opts.seed;
  r.trials = opts.trials;
  DGRingRealization a = realize(doc.spec.localized());
  r.regularity = regularity_report(a, opts);
  const auto& vars = a.spec().vars();
  r.h0_groebner_hash = hash_polys(a.h0().groebner(OrderKind::grevlex), vars);
  r.h0_local_basis_hash = hash_polys(a.h0().standard_basis_local().elements(), vars);
  VerifyOptions vo;
  vo.regularity = opts;
  r.main = run_property(Property::main, doc, vo);
  return r;
}

std::string render_json(const TowerReport& r) {
  const auto& reg = r.regularity;
  const auto& vars = r.doc.spec.vars();
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "seqreg"}, {"version", kToolVersion}};
  j["input"] = format_tower(r.doc);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["coordinates"] = r.doc.spec.point() ? "centered at the base point" : "original";
  j["amplitude"] = {{"inf", reg.amplitude.inf}, {"sup", reg.amplitude.sup}, {"amp", reg.amplitude.amp()}};
  j["local_dim"] = reg.local_dim;
  j["embdim"] = reg.embdim;
  j["seq_depth"] = {{"value", reg.seq_depth.depth},
                    {"witness", poly_strings(reg.seq_depth.witness, vars)},
                    {"taint", taint(reg.seq_depth.certified)}};
  j["depth"] = reg.depth;
  j["is_local_cm"] = {{"value", reg.is_local_cm}, {"taint", taint(reg.seq_depth.certified)}};
  j["h0_is_regular_local"] = reg.h0_is_regular_local;
  Json sr;
  sr["value"] = reg.sequence_regular.value;
  sr["witness"] = poly_strings(reg.sequence_regular.witness, vars);
  sr["failed_at"] = reg.sequence_regular.failed_at ? Json(*reg.sequence_regular.failed_at) : Json(nullptr);
  sr["taint"] = "certified";
  j["sequence_regular"] = std::move(sr);
  j["constant_amplitude"] = reg.constant_amplitude;
  if (reg.is_local_cm && reg.constant_amplitude) {
    j["cohen_macaulay"] = {{"value", true},
                           {"basis", "local-CM with constant amplitude over a catenary H^0"},
                           {"taint", taint(reg.seq_depth.certified)}};
  }
  j["kappa"] = reg.kappa ? kappa_json(*reg.kappa) : Json(nullptr);
  j["verdicts"] = Json::array({verdict_json(r.main)});
  j["caveats"] = reg.caveats;
  j["hashes"] = {{"h0_groebner_grevlex", r.h0_groebner_hash}, {"h0_local_standard_basis", r.h0_local_basis_hash}};
  if (r.seconds) j["timing"] = {{"seconds", seconds_string(*r.seconds)}};
  return j.dump(2) + "\n";
}

std::string render_text(const TowerReport& r) {
  const auto& reg = r.regularity;
  const auto& vars = r.doc.spec.vars();
  std::ostringstream os;
  os << "seqreg " << kToolVersion << "  seed " << r.seed << "  trials " << r.trials << "\n";
  os << "tower: " << r.doc.spec.describe() << "\n";
  if (r.doc.spec.point()) os << "(elements below are in coordinates centered at the base point)\n";
  os << "amplitude: " << reg.amplitude.amp() << " (H^" << reg.amplitude.inf << " .. H^" << reg.amplitude.sup << ")\n";
  os << "local dimension: " << reg.local_dim << "\n";
  os << "embedding dimension: " << reg.embdim << "\n";
  os << "seq.depth: " << reg.seq_depth.depth << " " << bracketed(poly_strings(reg.seq_depth.witness, vars)) << " ("
     << taint(reg.seq_depth.certified) << ")\n";
  os << "depth: " << reg.depth << "\n";
  os << "local-CM: " << (reg.is_local_cm ? "yes" : "no") << " (" << taint(reg.seq_depth.certified) << ")\n";
  os << "H^0 regular local: " << (reg.h0_is_regular_local ? "yes" : "no") << "\n";
  os << "constant amplitude: " << (reg.constant_amplitude ? "yes" : "no") << "\n";
  os << "sequence-regular: " << (reg.sequence_regular.value ? "yes" : "no") << " "
     << bracketed(poly_strings(reg.sequence_regular.witness, vars));
  if (reg.sequence_regular.failed_at) os << " fails at position " << *reg.sequence_regular.failed_at;
  os << "\n";
  if (reg.kappa) {
    os << "kappa(A):\n";
    kappa_text(os, *reg.kappa);
  }
  os << "verdicts:\n";
  verdict_text(os, r.main, "  ");
  if (!reg.caveats.empty()) {
    os << "caveats:\n";
    for (const auto& c : reg.caveats) os << "  - " << c << "\n";
  }
  os << "hashes: h0 grevlex " << r.h0_groebner_hash << ", h0 local " << r.h0_local_basis_hash << "\n";
  if (r.seconds) os << "time: " << seconds_string(*r.seconds) << " s\n";
  return os.str();
}

std::string render_json(const VerifyReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "seqreg"}, {"version", kToolVersion}};
  j["input"] = format_tower(r.doc);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["verdict"] = verdict_json(r.verdict);
  if (r.reproduction) j["reproduction"] = *r.reproduction;
  if (r.seconds) j["timing"] = {{"seconds", seconds_string(*r.seconds)}};
  return j.dump(2) + "\n";
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "seqreg " << kToolVersion << "  seed " << r.seed << "  trials " << r.trials << "\n";
  os << "tower: " << r.doc.spec.describe() << "\n";
  verdict_text(os, r.verdict, "");
  if (r.reproduction && r.verdict.outcome != Outcome::pass) os << "reproduce: " << *r.reproduction << "\n";
  if (r.seconds) os << "time: " << seconds_string(*r.seconds) << " s\n";
  return os.str();
}

std::string render_json(const CorpusSummary& s, std::optional<double> seconds) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "seqreg"}, {"version", kToolVersion}};
  j["profile"] = std::string(property_name(s.profile));
  j["seed"] = s.seed;
  j["requested"] = s.requested;
  j["generated"] = s.generated;
  j["applicable"] = s.applicable;
  j["passed"] = s.passed;
  j["certified"] = s.certified;
  j["counterexamples"] = s.counterexamples;
  j["inconclusive"] = s.inconclusive;
  j["budget"] = s.budget;
  j["clean"] = s.clean();
  Json fails = Json::array();
  for (const auto& f : s.failures) {
    Json e;
    e["index"] = f.index;
    e["seed"] = f.seed;
    e["tower"] = f.tower;
    e["verdict"] = verdict_json(f.verdict);
    e["reproduction"] = reproduction_command(s.profile, f.seed);
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  if (seconds) j["timing"] = {{"seconds", seconds_string(*seconds)}};
  return j.dump(2) + "\n";
}

std::string render_text(const CorpusSummary& s) {
  std::ostringstream os;
  os << "corpus " << property_name(s.profile) << "  seed " << s.seed << "\n";
  os << "generated " << s.generated << ", applicable " << s.applicable << " of " << s.requested << " requested\n";
  os << "passed " << s.passed << " (certified " << s.certified << "), counterexamples " << s.counterexamples
     << ", inconclusive " << s.inconclusive << ", budget " << s.budget << "\n";
  for (const auto& f : s.failures) {
    os << "\ninstance " << f.index << " (seed " << f.seed << "):\n" << f.tower;
    verdict_text(os, f.verdict, "  ");
    os << "  reproduce: " << reproduction_command(s.profile, f.seed) << "\n";
  }
  os << (s.clean() ? "result: clean\n" : "result: NOT clean\n");
  return os.str();
}

std::string render_kappa_text(const TowerDocument& doc, const ResidueDGField& k) {
  std::ostringstream os;
  os << "tower: " << doc.spec.describe() << "\n";
  os << "kappa(A):\n";
  kappa_text(os, k);
  TowerDocument kd = kappa_document(k);
  os << "\n" << format_tower(kd);
  return os.str();
}

std::string render_kappa_json(const TowerDocument& doc, const ResidueDGField& k) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "seqreg"}, {"version", kToolVersion}};
  j["input"] = format_tower(doc);
  j["kappa"] = kappa_json(k);
  j["all_checks_pass"] = k.all_checks_pass();
  return j.dump(2) + "\n";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::pass:
    case Outcome::not_applicable:
      return 0;
    case Outcome::counterexample:
      return 1;
    case Outcome::inconclusive:
    case Outcome::budget:
      return 2;
  }
  return 2;
}

}  // namespace seqreg
