#include "locred/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "locred/certificate.hpp"
#include "locred/construct.hpp"
#include "locred/error.hpp"
#include "locred/ffcase.hpp"
#include "locred/groups.hpp"
#include "locred/ratfactor.hpp"

namespace locred {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.out);
  f << text;
}

json scan_json(const ScanRecord& s) {
  json hist = json::object();
  for (const auto& [pattern, count] : s.histogram) hist[pattern] = count;
  return json{{"bound", s.bound},
              {"primes", s.primes},
              {"irreducible_reductions", s.irreducible_primes},
              {"histogram", hist},
              {"digest", s.digest}};
}

int run_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ConstructOptions opts;
  opts.r_bound = cfg.search_bound;
  opts.scan_bound = cfg.scan_bound;
  opts.seed = cfg.seed;
  const Certificate cert = cfg.mode == "modp" ? construct_modp(cfg.degree, opts) : construct_padic(cfg.degree, opts);
  emit(cfg, certificate_to_json(cert), out);
  err << "construct: degree " << cert.degree << " (" << to_string(cert.mode) << "), family "
      << cert.construction.family << "\n";
  if (cert.polynomial) err << "  f = " << cert.polynomial->pretty() << "\n";
  if (cert.certificate_only) {
    err << "  group certificate only: " << cert.note << "\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Certificate cert = certificate_from_json(read_file(cfg.cert_path));
  const Verdict v = verify_certificate(cert, cfg.verify_scan_bound, cfg.seed);
  emit(cfg, verdict_to_json(v), out);
  err << "verify: " << to_string(v.status);
  if (!v.reason.empty()) err << ": " << v.reason;
  err << "\n";
  for (const auto& g : v.gaps) err << "  gap: " << g << "\n";
  if (cfg.verbose) {
    for (const auto& line : v.log) err << "  " << line << "\n";
  }
  switch (v.status) {
    case VerdictStatus::Verified: return kExitOk;
    case VerdictStatus::Falsified: return kExitFalsified;
    case VerdictStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int run_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  IntPolynomial f;
  try {
    f = IntPolynomial::parse(trim(read_file(cfg.poly_path)));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  const bool irreducible = z_irreducible(f, cfg.seed);
  const ScanRecord s = scan(f, cfg.scan_bound, cfg.seed);
  json j = json::object();
  j["polynomial"] = f.to_string();
  j["irreducible_over_Q"] = irreducible;
  j["scan"] = scan_json(s);
  emit(cfg, j.dump(2) + "\n", out);
  err << "scan: f = " << f.pretty() << ", " << (irreducible ? "irreducible" : "reducible") << " over Q, "
      << s.primes << " primes <= " << s.bound << ", " << s.irreducible_primes.size() << " with irreducible reduction\n";
  return kExitOk;
}

int run_hilbert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const HilbertReport r = hilbert_quartic(parse_integer(cfg.a), parse_integer(cfg.b), cfg.scan_bound);
  json j = json::object();
  j["polynomial"] = r.polynomial.to_string();
  j["irreducible_over_Q"] = r.irreducible;
  j["scan"] = scan_json(r.scan);
  j["q2"] = json{{"status", to_string(r.q2.status)}, {"witness", r.q2.describe()}};
  emit(cfg, j.dump(2) + "\n", out);
  err << "hilbert: f = " << r.polynomial.pretty() << ", " << (r.irreducible ? "irreducible" : "reducible")
      << " over Q; " << r.scan.irreducible_primes.size() << " primes <= " << r.scan.bound
      << " with irreducible reduction; Q_2: " << r.q2.describe() << "\n";
  return kExitOk;
}

std::vector<Group::Elem> parse_index_list(const std::string& text) {
  std::vector<Group::Elem> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cell.size()) throw Error(ErrorCode::ParseError, "bad index '" + cell + "'");
    out.push_back(static_cast<Group::Elem>(v));
  }
  return out;
}

GroupFamily load_table_group(const RunConfig& cfg) {
  try {
    std::vector<std::vector<Group::Elem>> table;
    std::stringstream ss(read_file(cfg.table_path));
    std::string line;
    while (std::getline(ss, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      table.push_back(parse_index_list(line));
    }
    Group g = Group::from_table(std::move(table), cfg.table_path);
    Subgroup h = cfg.subgroup.empty() ? Subgroup::trivial(g) : Subgroup(g, parse_index_list(cfg.subgroup));
    return GroupFamily{g, h, "table:" + cfg.table_path, std::nullopt, ""};
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

int run_group_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupFamily fam = cfg.table_path.empty() ? build_from_descriptor(cfg.group) : load_table_group(cfg);
  const auto& g = fam.group;
  const std::uint64_t n = cfg.index.value_or(g.order() / fam.designated.size());
  const Lemma1Report l1 = check_lemma1(fam.designated, n);
  json j = json::object();
  j["group"] = fam.descriptor;
  j["name"] = g.name();
  j["order"] = g.order();
  j["exponent"] = exponent(g);
  j["h_order"] = fam.designated.size();
  j["index"] = n;
  j["lemma1"] = json{{"pass", l1.pass}, {"message", l1.message}};
  bool ok = l1.pass;
  try {
    const Lemma3Report l3 = check_lemma3(fam.designated, n);
    j["lemma3"] = json{{"pass", l3.pass},
                       {"core_trivial", l3.core_trivial},
                       {"metacyclic_subgroups", l3.metacyclic_count},
                       {"max_product", l3.max_product},
                       {"message", l3.message}};
    ok = ok && l3.pass;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    j["lemma3"] = nullptr;
    err << "  lemma3 skipped: " << e.what() << "\n";
  }
  if (g.order() <= kNormalityCheckCap) j["no_cyclic_normal"] = check_no_cyclic_normal(g);
  emit(cfg, j.dump(2) + "\n", out);
  err << "group-check: " << g.name() << " of order " << g.order() << ", index " << n << ": lemma1 "
      << (l1.pass ? "pass" : "fail");
  if (!j["lemma3"].is_null()) err << ", lemma3 " << (j["lemma3"]["pass"].get<bool>() ? "pass" : "fail");
  err << "\n";
  return ok ? kExitOk : kExitFalsified;
}

std::string degrees_string(const std::vector<int>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

int run_ffdemo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Case3Polynomial c = build_case3(cfg.p, cfg.e);
  const Case3Report r = verify_case3(c.poly, c.params, cfg.dmax);
  auto local = [](const LocalInfo& l) { return std::to_string(l.degree) + (l.ramified ? " (ram)" : ""); };
  if (cfg.json) {
    json places = json::array();
    for (const auto& pr : r.places) {
      places.push_back(json{{"place", pr.place.to_string()},
                            {"degree", pr.place.degree},
                            {"L", json{{"degree", pr.l.degree}, {"ramified", pr.l.ramified}}},
                            {"M", json{{"degree", pr.m.degree}, {"ramified", pr.m.ramified}}},
                            {"predicted", pr.predicted_degree},
                            {"scale_exponent", pr.scale_exponent},
                            {"factor_degrees", pr.factor_degrees},
                            {"squarefree_reduction", pr.reduction_squarefree},
                            {"ok", pr.ok}});
    }
    json j = json::object();
    j["p"] = cfg.p;
    j["e"] = cfg.e;
    j["multiplier"] = c.multiplier.to_string();
    j["polynomial"] = c.poly.to_string();
    j["dmax"] = cfg.dmax;
    j["places"] = places;
    j["census_ok"] = r.census_ok;
    j["degrees_ok"] = r.degrees_ok;
    j["ramification_ok"] = r.ramification_ok;
    j["symmetry_ok"] = r.symmetry_ok;
    j["separable"] = r.separable;
    j["pass"] = r.pass;
    emit(cfg, j.dump(2) + "\n", out);
  } else {
    std::ostringstream t;
    t << "P(x) = " << c.poly.to_string() << "\n";
    t << std::left << std::setw(28) << "place" << std::setw(10) << "L" << std::setw(10) << "M" << std::setw(6)
      << "k" << std::setw(16) << "factors" << "ok\n";
    for (const auto& pr : r.places) {
      t << std::setw(28) << pr.place.to_string() << std::setw(10) << local(pr.l) << std::setw(10) << local(pr.m)
        << std::setw(6) << pr.scale_exponent << std::setw(16)
        << degrees_string(pr.factor_degrees) + (pr.reduction_squarefree ? "" : "*") << (pr.ok ? "yes" : "NO")
        << "\n";
    }
    emit(cfg, t.str(), out);
  }
  err << "ffdemo: p = " << cfg.p << ", e = " << cfg.e << ", " << r.places.size() << " places of degree <= "
      << cfg.dmax << ": " << (r.pass ? "pass" : "FAIL") << "\n";
  return r.pass ? kExitOk : kExitFalsified;
}

}  // namespace

std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"Irreducible polynomials that are reducible locally everywhere, with certificates", "locred"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "seed for randomized factoring")->default_val(0);
  app.add_flag("-v,--verbose", cfg.verbose, "print every verification check");

  auto* construct = app.add_subcommand("construct", "build a polynomial and its certificate");
  construct->add_option("--degree", cfg.degree, "composite degree n")->required();
  construct->add_option("--mode", cfg.mode, "modp or padic")
      ->check(CLI::IsMember({"modp", "padic"}))
      ->default_val("padic");
  construct->add_option("--bound", cfg.search_bound, "search bound for the auxiliary prime r")
      ->default_val(1000000)
      ->check(CLI::PositiveNumber);
  construct->add_option("--scan-bound", cfg.scan_bound, "scan primes up to this bound")
      ->default_val(1000)
      ->check(CLI::PositiveNumber);
  construct->add_option("--out", cfg.out, "certificate path (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  verify->add_option("--cert", cfg.cert_path, "certificate JSON")->required();
  verify->add_option("--scan-bound", cfg.verify_scan_bound, "override the recorded scan bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", cfg.out, "verdict path (default stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "factor patterns modulo small primes");
  scan_cmd->add_option("--poly", cfg.poly_path, "file holding c0,c1,...,cn")->required();
  scan_cmd->add_option("--bound", cfg.scan_bound, "largest prime")->default_val(1000)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", cfg.out, "report path (default stdout)");

  auto* hilbert = app.add_subcommand("hilbert", "the quartic x^4 + 2a x^2 + b^2");
  hilbert->add_option("--a", cfg.a, "integer a")->default_val("0");
  hilbert->add_option("--b", cfg.b, "integer b")->default_val("1");
  hilbert->add_option("--scan-bound", cfg.scan_bound, "largest prime")->default_val(1000)->check(CLI::PositiveNumber);
  hilbert->add_option("--out", cfg.out, "report path (default stdout)");

  auto* group = app.add_subcommand("group-check", "check the group-theoretic conditions");
  auto* desc = group->add_option("descriptor", cfg.group,
                                 "semidirect:q=2,m=5 | abelian:q=3,m=2 | t4:p=2,s=5[,sub=4.1] | cyclic:n=6");
  auto* table = group->add_option("--table", cfg.table_path, "CSV multiplication table of indices");
  desc->excludes(table);
  group->add_option("--subgroup", cfg.subgroup, "elements of H for --table (default trivial)")->needs(table);
  group->add_option("--index", cfg.index, "n (default [G:H])")->check(CLI::PositiveNumber);
  group->add_option("--out", cfg.out, "report path (default stdout)");

  auto* ffdemo = app.add_subcommand("ffdemo", "compositum of two Artin-Schreier extensions of F_p(t)");
  ffdemo->add_option("--p", cfg.p, "characteristic")->default_val(2)->check(CLI::PositiveNumber);
  ffdemo->add_option("--e", cfg.e, "exponent prime to p")->default_val(1)->check(CLI::PositiveNumber);
  ffdemo->add_option("--dmax", cfg.dmax, "largest place degree")->default_val(4)->check(CLI::Range(1, 12));
  ffdemo->add_flag("--json", cfg.json, "JSON instead of a table");
  ffdemo->add_option("--out", cfg.out, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cfg.command == "group-check" && cfg.group.empty() && cfg.table_path.empty()) {
    err << "usage error: group-check needs a descriptor or --table\n";
    return kExitUsage;
  }
  return std::nullopt;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "construct") return run_construct(cfg, out, err);
    if (cfg.command == "verify") return run_verify(cfg, out, err);
    if (cfg.command == "scan") return run_scan(cfg, out, err);
    if (cfg.command == "hilbert") return run_hilbert(cfg, out, err);
    if (cfg.command == "group-check") return run_group_check(cfg, out, err);
    if (cfg.command == "ffdemo") return run_ffdemo(cfg, out, err);
    err << "usage error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::MalformedCertificate || e.code() == ErrorCode::ParseError) return kExitMalformed;
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (auto early = parse_args(args, cfg, out, err)) return *early;
  return dispatch(cfg, out, err);
}

}  // namespace locred
