#include "locred/certificate.hpp"

#include <nlohmann/json.hpp>

#include "locred/error.hpp"

namespace locred {

using json = nlohmann::ordered_json;

namespace {

json scan_to_json(const ScanRecord& s) {
  json hist = json::object();
  for (const auto& [pattern, count] : s.histogram) hist[pattern] = count;
  return json{{"bound", s.bound},
              {"primes", s.primes},
              {"irreducible_reductions", s.irreducible_primes},
              {"histogram", hist},
              {"digest", s.digest}};
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedCertificate, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::uint64_t get_u64(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_unsigned()) malformed(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::uint64_t opt_u64(const json& obj, const char* key) { return obj.contains(key) ? get_u64(obj, key) : 0; }

std::string get_string(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool get_bool(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_boolean()) malformed(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

IntPolynomial get_poly(const json& obj, const char* key) {
  try {
    return IntPolynomial::parse(get_string(obj, key));
  } catch (const Error& e) {
    malformed(std::string("field '") + key + "': " + e.what());
  }
}

ScanRecord scan_from_json(const json& j) {
  ScanRecord s;
  s.bound = get_u64(j, "bound");
  s.primes = get_u64(j, "primes");
  const json& irr = field(j, "irreducible_reductions");
  if (!irr.is_array()) malformed("irreducible_reductions must be an array");
  for (const auto& p : irr) {
    if (!p.is_number_unsigned()) malformed("irreducible_reductions entries must be integers");
    s.irreducible_primes.push_back(p.get<std::uint64_t>());
  }
  const json& hist = field(j, "histogram");
  if (!hist.is_object()) malformed("histogram must be an object");
  for (const auto& [k, v] : hist.items()) {
    if (!v.is_number_unsigned()) malformed("histogram counts must be integers");
    s.histogram[k] = v.get<std::size_t>();
  }
  s.digest = get_string(j, "digest");
  return s;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  const auto& c = cert.construction;
  json con = json::object();
  con["family"] = c.family;
  con["q"] = c.q;
  con["m"] = c.m;
  if (c.ell1) con["ell1"] = c.ell1;
  if (c.ell2) con["ell2"] = c.ell2;
  if (c.ell) con["ell"] = c.ell;
  if (c.r) con["r"] = c.r;
  if (c.p_star) con["p_star"] = c.p_star;
  json comps = json::array();
  for (const auto& comp : c.components) {
    comps.push_back(json{{"conductor", comp.conductor}, {"degree", comp.degree}, {"minpoly", comp.minpoly.to_string()}});
  }
  con["components"] = comps;
  json mults = json::array();
  for (const auto& m : c.multipliers) mults.push_back(to_decimal(m));
  con["multipliers"] = mults;
  if (c.base_quartic) con["base_quartic"] = c.base_quartic->to_string();

  json claims = json::object();
  claims["group"] = cert.claims.group;
  claims["order"] = cert.claims.order;
  claims["exponent"] = cert.claims.exponent;
  claims["index"] = cert.claims.index;
  claims["lemma1"] = cert.claims.lemma1;
  if (cert.claims.lemma3) claims["lemma3"] = *cert.claims.lemma3;
  if (cert.claims.local_degree_bound) claims["local_degree_bound"] = *cert.claims.local_degree_bound;

  json wit = json::array();
  for (const auto& w : cert.witnesses) {
    json data = json::object();
    for (const auto& [k, v] : w.data) data[k] = v;
    wit.push_back(json{{"p", w.p}, {"reason", w.reason}, {"data", data}});
  }

  json j = json::object();
  j["schema"] = kCertificateSchema;
  j["mode"] = to_string(cert.mode);
  j["degree"] = cert.degree;
  j["certificate_only"] = cert.certificate_only;
  if (!cert.note.empty()) j["note"] = cert.note;
  j["construction"] = con;
  j["polynomial"] = cert.polynomial ? json(cert.polynomial->to_string()) : json(nullptr);
  j["claims"] = claims;
  j["ramified_witnesses"] = wit;
  j["scan"] = cert.scan ? scan_to_json(*cert.scan) : json(nullptr);
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (get_string(j, "schema") != kCertificateSchema) malformed("unsupported schema");
  Certificate cert;
  const std::string mode = get_string(j, "mode");
  if (mode == "modp") cert.mode = Mode::ModP;
  else if (mode == "padic") cert.mode = Mode::PAdic;
  else malformed("mode must be modp or padic");
  cert.degree = get_u64(j, "degree");
  cert.certificate_only = get_bool(j, "certificate_only");
  if (j.contains("note")) cert.note = get_string(j, "note");

  const json& con = field(j, "construction");
  auto& c = cert.construction;
  c.family = get_string(con, "family");
  c.q = get_u64(con, "q");
  c.m = get_u64(con, "m");
  c.ell1 = opt_u64(con, "ell1");
  c.ell2 = opt_u64(con, "ell2");
  c.ell = opt_u64(con, "ell");
  c.r = opt_u64(con, "r");
  c.p_star = opt_u64(con, "p_star");
  const json& comps = field(con, "components");
  if (!comps.is_array()) malformed("components must be an array");
  for (const auto& comp : comps) {
    c.components.push_back({get_u64(comp, "conductor"), get_u64(comp, "degree"), get_poly(comp, "minpoly")});
  }
  const json& mults = field(con, "multipliers");
  if (!mults.is_array()) malformed("multipliers must be an array");
  for (const auto& m : mults) {
    if (!m.is_string()) malformed("multipliers must be decimal strings");
    try {
      c.multipliers.push_back(parse_integer(m.get<std::string>()));
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  if (con.contains("base_quartic")) c.base_quartic = get_poly(con, "base_quartic");

  const json& poly = field(j, "polynomial");
  if (!poly.is_null()) cert.polynomial = get_poly(j, "polynomial");

  const json& claims = field(j, "claims");
  cert.claims.group = get_string(claims, "group");
  cert.claims.order = get_u64(claims, "order");
  cert.claims.exponent = get_u64(claims, "exponent");
  cert.claims.index = get_u64(claims, "index");
  cert.claims.lemma1 = get_bool(claims, "lemma1");
  if (claims.contains("lemma3")) cert.claims.lemma3 = get_bool(claims, "lemma3");
  if (claims.contains("local_degree_bound")) cert.claims.local_degree_bound = get_u64(claims, "local_degree_bound");

  const json& wit = field(j, "ramified_witnesses");
  if (!wit.is_array()) malformed("ramified_witnesses must be an array");
  for (const auto& w : wit) {
    RamifiedWitness rw;
    rw.p = get_u64(w, "p");
    rw.reason = get_string(w, "reason");
    const json& data = field(w, "data");
    if (!data.is_object()) malformed("witness data must be an object");
    for (const auto& [k, v] : data.items()) {
      if (!v.is_string()) malformed("witness data values must be strings");
      rw.data[k] = v.get<std::string>();
    }
    cert.witnesses.push_back(std::move(rw));
  }
  const json& sc = field(j, "scan");
  if (!sc.is_null()) cert.scan = scan_from_json(sc);
  return cert;
}

std::string verdict_to_json(const Verdict& v) {
  json j = json::object();
  j["verdict"] = to_string(v.status);
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["gaps"] = v.gaps;
  j["checks"] = v.log;
  return j.dump(2) + "\n";
}

}  // namespace locred
