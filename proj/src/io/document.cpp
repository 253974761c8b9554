#include "equichar/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "equichar/checks.hpp"

namespace equichar {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ---- input ----

void expect_keys(const json& obj, const std::string& what, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  require(obj.is_object(), ErrorKind::Validation, what + " must be a JSON object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    require(obj.contains(k), ErrorKind::Validation, what + ": missing field \"" + k + "\"");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : obj.items())
    require(allowed.count(k) > 0, ErrorKind::Validation, what + ": unknown field \"" + k + "\"");
}

Int get_int(const json& v, const std::string& what) {
  require(v.is_number_integer(), ErrorKind::Validation, what + " must be an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    require(u <= static_cast<std::uint64_t>(INT64_MAX), ErrorKind::Validation, what + " is out of range");
    return static_cast<Int>(u);
  }
  return v.get<Int>();
}

std::vector<Int> get_int_array(const json& v, const std::string& what) {
  require(v.is_array(), ErrorKind::Validation, what + " must be an array of integers");
  std::vector<Int> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(get_int(v[k], what + "[" + std::to_string(k) + "]"));
  return out;
}

CyclicCoverData parse_cyclic(const json& doc, const Limits& lim) {
  expect_keys(doc, "cyclic input", {"p", "n", "genus_base", "points"}, {"mode"});
  CyclicCoverData d;
  d.p = get_int(doc["p"], "p");
  d.n = get_int(doc["n"], "n");
  d.genus_base = get_int(doc["genus_base"], "genus_base");
  require(is_prime(d.p), ErrorKind::Validation, "p must be prime");
  require(d.n >= 0 && d.n <= 64, ErrorKind::Validation, "n must be nonnegative");
  require(checked_pow(d.p, static_cast<unsigned>(d.n)) <= lim.max_group_order, ErrorKind::Validation,
          "p^n exceeds the bound " + std::to_string(lim.max_group_order));
  const json& pts = doc["points"];
  require(pts.is_array(), ErrorKind::Validation, "points must be an array");
  require(static_cast<Int>(pts.size()) <= lim.max_points, ErrorKind::Validation, "too many branch points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string what = "points[" + std::to_string(k) + "]";
    const json& pt = pts[k];
    require(pt.is_object() && pt.size() == 1, ErrorKind::Validation,
            what + " must have exactly one of \"i_seq\", \"upper\", \"lower\"");
    if (pt.contains("i_seq")) d.points.push_back({get_int_array(pt["i_seq"], what + ".i_seq")});
    else if (pt.contains("upper")) d.points.push_back(WildBranchPoint::from_upper(get_int_array(pt["upper"], what + ".upper")));
    else if (pt.contains("lower")) d.points.push_back(WildBranchPoint::from_lower(get_int_array(pt["lower"], what + ".lower"), d.p));
    else fail(ErrorKind::Validation, what + " must have exactly one of \"i_seq\", \"upper\", \"lower\"");
  }
  d.validate();
  return d;
}

SemidirectCoverData parse_semidirect(const json& doc, const Limits& lim) {
  expect_keys(doc, "semidirect input", {"p", "c", "chi_exponent", "genus_base_Z", "tame", "wild"}, {"mode"});
  const Int p = get_int(doc["p"], "p");
  const Int c = get_int(doc["c"], "c");
  require(c >= 1 && c <= lim.max_c, ErrorKind::Validation, "c must lie in 1.." + std::to_string(lim.max_c));
  SemidirectCoverData d;
  d.shape = GroupShape::make(p, 1, c, get_int(doc["chi_exponent"], "chi_exponent"));
  d.genus_base = get_int(doc["genus_base_Z"], "genus_base_Z");
  const json& tame = doc["tame"];
  const json& wild = doc["wild"];
  require(tame.is_array() && wild.is_array(), ErrorKind::Validation, "tame and wild must be arrays");
  require(static_cast<Int>(tame.size() + wild.size()) <= lim.max_points, ErrorKind::Validation, "too many branch points");
  for (std::size_t k = 0; k < tame.size(); ++k) {
    const std::string what = "tame[" + std::to_string(k) + "]";
    expect_keys(tame[k], what, {"e", "theta_exp"});
    d.tame.push_back({get_int(tame[k]["e"], what + ".e"), get_int(tame[k]["theta_exp"], what + ".theta_exp")});
  }
  for (std::size_t k = 0; k < wild.size(); ++k) {
    const std::string what = "wild[" + std::to_string(k) + "]";
    expect_keys(wild[k], what, {"anchor", "u"});
    WildOrbit o;
    const json& a = wild[k]["anchor"];
    if (a.is_string()) {
      require(a.get<std::string>() == "free", ErrorKind::Validation, what + ".anchor must be an index or \"free\"");
    } else {
      const Int idx = get_int(a, what + ".anchor");
      require(idx >= 0, ErrorKind::Validation, what + ".anchor must be nonnegative");
      o.anchor = static_cast<std::size_t>(idx);
    }
    o.u = get_int(wild[k]["u"], what + ".u");
    d.wild.push_back(o);
  }
  d.validate();
  // the expanded Z/p-cover must respect the point bound too
  Int expanded = 0;
  for (std::size_t k = 0; k < d.wild.size(); ++k) expanded = checked_add(expanded, d.orbit_size(k));
  require(expanded <= lim.max_points, ErrorKind::Validation, "too many wild branch points on Y");
  return d;
}

struct SuperellipticInput {
  Int p, m, n;
};

SuperellipticInput parse_superelliptic(const json& doc) {
  expect_keys(doc, "superelliptic input", {"p", "m", "n"}, {"mode"});
  return {get_int(doc["p"], "p"), get_int(doc["m"], "m"), get_int(doc["n"], "n")};
}

// ---- output ----

std::vector<std::array<Int, 3>> sorted_entries(const GModuleDecomp& m) {
  std::vector<std::array<Int, 3>> out;
  for (const auto& [key, k] : m.mult()) out.push_back({key.first, key.second, k});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a[1] != b[1]) return a[1] > b[1];
    return a[0] < b[0];
  });
  return out;
}

ordered_json group_json(const GroupShape& s) {
  return ordered_json{{"p", s.p}, {"n", s.n}, {"c", s.c}, {"chi_exponent", s.a_chi}};
}

void put_module(ordered_json& doc, const GModuleDecomp& m, RunResult& r) {
  r.entries = sorted_entries(m);
  ordered_json arr = ordered_json::array();
  for (const auto& e : r.entries)
    arr.push_back(ordered_json{{"socle_char_exponent", e[0]}, {"length", e[1]}, {"multiplicity", e[2]}});
  doc["dimension"] = dim(m);
  doc["pretty"] = m.str(true);
  doc["decomposition"] = std::move(arr);
}

ordered_json vec_json(const VirtualCModule& v) { return ordered_json(v.mult()); }

std::string text_module(const GModuleDecomp& m) {
  return "H^1_dR(X) = " + m.str(true) + "\ndimension " + std::to_string(dim(m)) + "\n";
}

void finish(RunResult& r, const ordered_json& doc, std::string text) {
  r.json = doc.dump(2) + "\n";
  r.text = std::move(text);
}

void render_cyclic(const CyclicCoverData& d, RunResult& r) {
  const GModuleDecomp m = cyclic_hdr(d);
  const Int g = genus_top(d);
  ordered_json doc{{"mode", "cyclic"}, {"group", group_json(d.shape())}, {"genus_base", d.genus_base}, {"genus", g}};
  put_module(doc, m, r);
  finish(r, doc, text_module(m) + "genus " + std::to_string(g) + "\n");
}

void render_semidirect(const SemidirectCoverData& d, RunResult& r) {
  const SemidirectResult s = semidirect_hdr(d);
  const Int g = genus_top(cyclic_part(d));
  ordered_json doc{{"mode", "semidirect"}, {"group", group_json(d.shape)}, {"genus_base_Z", d.genus_base},
                   {"genus_Y", s.genus_Y}, {"genus", g}};
  doc["H0_omega_Y"] = vec_json(s.h0_omega);
  doc["H0_omega_Y_D"] = vec_json(s.h0_omega_D);
  doc["H0_omega_Y_Rprime"] = vec_json(s.h0_omega_Rprime);
  doc["V1"] = vec_json(s.v1);
  doc["V2"] = vec_json(s.v2);
  put_module(doc, s.result, r);
  finish(r, doc,
         text_module(s.result) + "genus " + std::to_string(g) + ", genus of Y " + std::to_string(s.genus_Y) +
             "\nV1 = " + s.v1.str(true) + "\nV2 = " + s.v2.str(true) + "\n");
}

void render_superelliptic(const SuperellipticInput& in, RunResult& r) {
  const SuperellipticClosedForm f = superelliptic_closed_form(in.p, in.m, in.n);
  const Int g = (checked_pow(in.p, static_cast<unsigned>(in.n)) - 1) * (in.m - 1) / 2;
  ordered_json doc{{"mode", "superelliptic"}, {"p", in.p}, {"m", in.m}, {"n", in.n}, {"group", group_json(f.result.shape())},
                   {"genus", g}, {"c1", f.c1}, {"c2", f.c2}, {"c3", f.c3}};
  ordered_json delta = ordered_json::array();
  for (const auto& x : f.delta) delta.push_back(x.str());
  doc["delta"] = std::move(delta);
  doc["alpha"] = f.alpha;
  doc["beta"] = f.beta;
  doc["gamma"] = f.gamma;
  doc["V1"] = vec_json(f.v1);
  doc["V2"] = vec_json(f.v2);
  put_module(doc, f.result, r);
  finish(r, doc,
         text_module(f.result) + "genus " + std::to_string(g) + "\nV1 = " + f.v1.str(true) + "\nV2 = " + f.v2.str(true) +
             "\n");
}

void render_checks(const std::string& mode, const CheckReport& rep, RunResult& r) {
  ordered_json arr = ordered_json::array();
  std::ostringstream text;
  for (const auto& c : rep.checks) {
    arr.push_back(ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) text << ": " << c.detail;
    text << "\n";
  }
  ordered_json doc{{"mode", mode}, {"verb", "validate"}, {"passed", rep.ok()}, {"checks", std::move(arr)}};
  finish(r, doc, text.str());
  if (!rep.ok()) {
    r.status = Status::InternalError;
    r.error_kind = "CheckFailed";
    for (const auto& c : rep.checks)
      if (!c.passed) {
        r.message = "check failed: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
        break;
      }
  }
}

void dispatch(std::string_view verb, const json& doc, const Limits& lim, RunResult& r) {
  std::string mode;
  if (doc.is_object() && doc.contains("mode")) {
    require(doc["mode"].is_string(), ErrorKind::Validation, "mode must be a string");
    mode = doc["mode"].get<std::string>();
  }
  const bool validate = verb == "validate";
  if (validate) {
    require(!mode.empty(), ErrorKind::Validation, "validate needs a \"mode\" field in the input");
  } else {
    require(verb == "cyclic" || verb == "semidirect" || verb == "superelliptic", ErrorKind::Validation,
            "unknown verb \"" + std::string(verb) + "\"");
    require(mode.empty() || mode == verb, ErrorKind::Validation,
            "input mode \"" + mode + "\" does not match verb \"" + std::string(verb) + "\"");
    mode = std::string(verb);
  }

  if (mode == "cyclic") {
    const CyclicCoverData d = parse_cyclic(doc, lim);
    if (!validate) return render_cyclic(d, r);
    cyclic_hdr(d);
    return render_checks(mode, validate_cyclic(d), r);
  }
  if (mode == "semidirect") {
    const SemidirectCoverData d = parse_semidirect(doc, lim);
    if (!validate) return render_semidirect(d, r);
    semidirect_hdr(d);
    return render_checks(mode, validate_semidirect(d), r);
  }
  if (mode == "superelliptic") {
    const SuperellipticInput in = parse_superelliptic(doc);
    const SemidirectCoverData d = superelliptic_data(in.p, in.m, in.n);
    require(static_cast<Int>(d.tame.size()) <= lim.max_points, ErrorKind::Validation, "too many branch points");
    if (!validate) return render_superelliptic(in, r);
    return render_checks(mode, validate_superelliptic(in.p, in.m, in.n), r);
  }
  fail(ErrorKind::Validation, "unknown mode \"" + mode + "\"");
}

void set_error(RunResult& r, Status s, std::string kind, std::string msg) {
  r = RunResult{};
  r.status = s;
  r.error_kind = std::move(kind);
  r.message = std::move(msg);
  ordered_json doc{{"error", r.error_kind}, {"message", r.message}};
  r.json = doc.dump(2) + "\n";
  r.text = "error (" + r.error_kind + "): " + r.message + "\n";
}

}  // namespace

Status status_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Validation:
    case ErrorKind::Overflow:
    case ErrorKind::InvalidJump:
    case ErrorKind::ModulusMismatch:
      return Status::ValidationError;
    case ErrorKind::EtaleUnsupported:
    case ErrorKind::NegativeMultiplicity:
    case ErrorKind::InvalidCover:
    case ErrorKind::NotAnOrbitSum:
    case ErrorKind::InconsistentTData:
      return Status::DomainError;
    case ErrorKind::RelationCheckFailed:
    case ErrorKind::Internal:
      return Status::InternalError;
  }
  return Status::InternalError;
}

RunResult run_document(std::string_view verb, std::string_view input_json, const Limits& limits) {
  RunResult r;
  try {
    json doc;
    try {
      doc = json::parse(input_json);
    } catch (const json::exception& e) {
      fail(ErrorKind::Validation, std::string("input is not valid JSON: ") + e.what());
    }
    require(doc.is_object(), ErrorKind::Validation, "input must be a JSON object");
    dispatch(verb, doc, limits, r);
  } catch (const Error& e) {
    set_error(r, status_for(e.kind()), to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    set_error(r, Status::InternalError, "Internal", e.what());
  }
  return r;
}

RunResult run_selfcheck_document(const oracle::SelfcheckConfig& config) {
  RunResult r;
  try {
    const oracle::SelfcheckReport rep = oracle::run_selfcheck(config);
    ordered_json suites = ordered_json::array();
    std::ostringstream text;
    text << "oracle self-check, seed " << config.seed << ", " << config.count << " random modules of dimension <= "
         << std::min(config.sample_dim, config.max_dim) << "\n";
    for (const auto& s : rep.suites) {
      suites.push_back(ordered_json{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures},
                                    {"first_failure", s.first_failure}});
      text << (s.ok() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases";
      if (!s.ok()) text << ", " << s.failures << " failed; first: " << s.first_failure;
      text << ")\n";
    }
    ordered_json doc{{"verb", "oracle"},      {"seed", config.seed},       {"count", config.count},
                     {"max_dim", config.max_dim}, {"passed", rep.ok()}, {"suites", std::move(suites)}};
    finish(r, doc, text.str());
    if (!rep.ok()) {
      r.status = Status::InternalError;
      r.error_kind = "CheckFailed";
      r.message = "oracle self-check failed";
    }
  } catch (const Error& e) {
    set_error(r, status_for(e.kind()), to_string(e.kind()), e.what());
  }
  return r;
}

}  // namespace equichar
