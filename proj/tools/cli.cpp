#include "psu4/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psu4/designs.hpp"
#include "psu4/permgroup.hpp"
#include "psu4/sieve.hpp"
#include "psu4/tables.hpp"

#ifndef PSU4_VERSION
#define PSU4_VERSION "0.0.0"
#endif

namespace psu4 {
namespace {

using nlohmann::json;

std::string str(const Integer& n) { return n.str(); }

std::string params_text(const Params& p) {
  return "(" + str(p.v) + "," + str(p.k) + "," + str(p.lambda) + ")";
}

std::string params_text(const SizeParams& p) {
  std::ostringstream os;
  os << "(" << p.v << "," << p.k << "," << p.lambda << ")";
  return os.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string command_echo(int argc, const char* const* argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

std::string case_label(const CaseOutcome& o) {
  std::ostringstream os;
  os << "line " << o.line << " q=" << o.q.q;
  if (o.subfield) os << " (q0=" << o.subfield->q0 << ", r=" << o.subfield->r << ")";
  return os.str();
}

json outcome_json(const CaseOutcome& o) {
  json j;
  j["line"] = o.line;
  j["q"] = o.q.q;
  j["p"] = o.q.p;
  j["a"] = o.q.a;
  if (o.subfield) {
    j["q0"] = o.subfield->q0;
    j["r"] = o.subfield->r;
  }
  j["v"] = str(o.v);
  j["k_bound"] = str(o.k_bound);
  j["status"] = std::string(status_name(o.status));
  if (o.reason) j["reason"] = std::string(reason_code(*o.reason));
  json candidates = json::array();
  for (const auto& c : o.candidates) {
    candidates.push_back({{"k", str(c.candidate.params.k)},
                          {"lambda", str(c.candidate.params.lambda)},
                          {"status", std::string(status_name(c.status))},
                          {"trace", c.candidate.trace}});
  }
  j["candidates"] = std::move(candidates);
  json rejections = json::object();
  for (const auto& [reason, count] : o.rejection_counts) rejections[std::string(reason_code(reason))] = count;
  j["rejections"] = std::move(rejections);
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

json survivors_json(const std::vector<Survivor>& list) {
  json out = json::array();
  for (const auto& s : list) {
    out.push_back({{"line", s.line},
                   {"q", s.q},
                   {"v", str(s.params.v)},
                   {"k", str(s.params.k)},
                   {"lambda", str(s.params.lambda)}});
  }
  return out;
}

int write_text_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return kIo;
  }
  f << text;
  f.flush();
  if (!f) {
    err << "error: failed writing " << path << "\n";
    return kIo;
  }
  return kOk;
}

struct SieveArgs {
  std::string line = "all";
  std::uint64_t p_max = 13;
  unsigned a_max = 3;
  std::string json_path;
  bool no_timestamp = false;
  unsigned threads = 0;
};

int cmd_sieve(const SieveArgs& args, const std::string& echo, std::ostream& out, std::ostream& err) {
  ScanOptions options{args.p_max, args.a_max, std::nullopt, args.threads};
  if (args.line != "all") {
    int line = 0;
    try {
      std::size_t used = 0;
      line = std::stoi(args.line, &used);
      if (used != args.line.size()) throw std::invalid_argument(args.line);
    } catch (const std::exception&) {
      err << "error: --line must be 1..16 or all\n";
      return kUsage;
    }
    if (line < 1 || line > 16) {
      err << "error: --line must be 1..16 or all\n";
      return kUsage;
    }
    options.line = line;
  }

  ScanReport report;
  try {
    report = scan_all(options);
  } catch (const CatalogError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  }

  std::map<std::string, std::size_t> eliminated;
  out << "scan p<=" << report.p_max << " a<=" << report.a_max << " line " << args.line << ": "
      << report.outcomes.size() << " cases\n";
  for (const auto& o : report.outcomes) {
    if (o.status == Status::Eliminated) {
      ++eliminated[std::string(reason_code(*o.reason))];
      continue;
    }
    out << "  " << case_label(o) << " v=" << str(o.v) << ": " << status_name(o.status) << "\n";
    for (const auto& c : o.candidates) {
      out << "    " << params_text(c.candidate.params) << " " << status_name(c.status) << "\n";
    }
    if (!o.note.empty()) out << "    note: " << o.note << "\n";
  }
  out << "eliminated:";
  if (eliminated.empty()) out << " none";
  for (const auto& [code, n] : eliminated) out << " " << code << "=" << n;
  out << "\n";
  const auto survivors = report.survivors();
  const auto unresolved = report.unresolved();
  out << "survivors: " << survivors.size() << "\n";
  for (const auto& s : survivors)
    out << "  line " << s.line << " q=" << s.q << " " << params_text(s.params) << "\n";
  out << "unresolved: " << unresolved.size() << "\n";
  for (const auto& s : unresolved)
    out << "  line " << s.line << " q=" << s.q << " " << params_text(s.params) << "\n";

  if (!args.json_path.empty()) {
    json j;
    j["version"] = PSU4_VERSION;
    j["command"] = echo;
    if (!args.no_timestamp) j["timestamp"] = utc_timestamp();
    j["p_max"] = report.p_max;
    j["a_max"] = report.a_max;
    j["line"] = args.line;
    json outcomes = json::array();
    for (const auto& o : report.outcomes) outcomes.push_back(outcome_json(o));
    j["outcomes"] = std::move(outcomes);
    j["survivors"] = survivors_json(survivors);
    j["unresolved"] = survivors_json(unresolved);
    return write_text_file(args.json_path, j.dump(2) + "\n", err);
  }
  return kOk;
}

int cmd_tables(int id, std::ostream& out, std::ostream& err) {
  if (!is_table_id(id)) {
    err << "error: unknown table " << id << " (known: 3 4 6 7 8 9)\n";
    return kUsage;
  }
  const auto check = check_table(id);
  out << check.text;
  for (const auto& a : check.annotations) out << "annotation: " << a << "\n";
  for (const auto& d : check.differences) out << "difference: " << d << "\n";
  out << "table " << id << ": " << (check.matches ? "matches" : "MISMATCH") << "\n";
  return check.matches ? kOk : kMismatch;
}

int cmd_construct(const std::string& kind_text, bool take_complement, const std::string& path,
                  std::ostream& out, std::ostream& err) {
  const auto kind = parse_kind(kind_text);
  if (!kind) {
    err << "error: unknown design " << kind_text << "\n";
    return kUsage;
  }
  auto d = build(*kind);
  if (take_complement) d = complement(d);
  const auto v = verify_symmetric(d);
  if (!v) {
    err << "construction failed verification: " << v.failure->axiom << ": " << v.failure->detail
        << "\n";
    return kMismatch;
  }
  const std::string text = to_design_text(d);
  const std::string line = std::string(kind_name(*kind)) + (take_complement ? " complement" : "") +
                           " " + params_text(*v.params) + "\n";
  if (path.empty()) {
    err << line;
    out << text;
    return kOk;
  }
  if (const int rc = write_text_file(path, text, err); rc != kOk) return rc;
  out << line;
  return kOk;
}

// Loads a design file; returns an exit code on failure.
int load_design(const std::string& path, IncidenceStructure& d, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "error: cannot read " << path << "\n";
    return kIo;
  }
  try {
    d = read_design(f);
  } catch (const DesignParseError& e) {
    err << path << ": parse error at line " << e.line() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << path << ": " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  IncidenceStructure d;
  if (const int rc = load_design(path, d, err); rc != kOk) return rc;
  const auto v = verify_symmetric(d);
  if (v) {
    out << "symmetric design " << params_text(*v.params) << "\n";
    return kOk;
  }
  out << "violation: " << v.failure->axiom << " at (" << v.failure->first << ", "
      << v.failure->second << "): " << v.failure->detail << "\n";
  return kMismatch;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, std::ostream& out,
            std::ostream& err) {
  IncidenceStructure a, b;
  if (const int rc = load_design(a_path, a, err); rc != kOk) return rc;
  if (const int rc = load_design(b_path, b, err); rc != kOk) return rc;
  const auto r = are_isomorphic(a, b);
  if (!r.isomorphic) {
    out << "isomorphic: no\n";
    return kOk;
  }
  out << "isomorphic: yes\nwitness:";
  for (std::size_t y : r.witness) out << " " << y;
  out << "\n";
  return kOk;
}

std::string group_name(const Integer& order) {
  if (order == 25920) return "PSU4(2)";
  if (order == 51840) return "PSU4(2):2";
  return "unidentified";
}

int cmd_group(const std::string& kind_text, const std::string& check, bool base_design,
              std::ostream& out, std::ostream& err) {
  const auto kind = parse_kind(kind_text);
  if (!kind) {
    err << "error: unknown design " << kind_text << "\n";
    return kUsage;
  }
  const auto geometric = build_geometric(*kind);
  // The 40-point designs are flag-transitive through their complements.
  const bool use_complement =
      !base_design && (*kind == DesignKind::Higman40 || *kind == DesignKind::Pg33);
  const IncidenceStructure d = use_complement ? complement(geometric.structure) : geometric.structure;
  const auto action = design_action(geometric);
  const std::string label =
      std::string(kind_name(*kind)) + (use_complement ? " complement" : "");

  if (check == "order") {
    const Integer order = group_order(action);
    out << label << ": order " << str(order) << " (" << group_name(order) << ")\n";
    return kOk;
  }
  if (check == "rank") {
    if (!is_transitive(action)) {
      out << label << ": not transitive\n";
      return kMismatch;
    }
    const auto sizes = stabilizer_orbit_sizes(action, 0);
    out << label << ": rank " << sizes.size() << ", subdegrees";
    for (std::size_t s : sizes) out << " " << s;
    out << "\n";
    return kOk;
  }
  if (check == "primitive") {
    const auto r = primitivity(action);
    switch (r.status) {
      case Primitivity::Primitive:
        out << label << ": primitive: yes\n";
        return kOk;
      case Primitivity::Imprimitive:
        out << label << ": primitive: no, block of size " << r.block.size() << "\n";
        return kMismatch;
      case Primitivity::NotTransitive:
        out << label << ": primitive: NOT_TRANSITIVE\n";
        return kMismatch;
    }
  }
  // flagtrans
  const bool yes = is_flag_transitive(action, d);
  const Integer order = group_order(action);
  const std::size_t nflags = flags(d).size();
  out << label << ": flag-transitive: " << (yes ? "yes" : "no") << " (flags " << nflags
      << ", order " << str(order) << ")\n";
  if (yes && order % nflags != 0) {
    err << "internal inconsistency: flag count does not divide the group order\n";
    return kMismatch;
  }
  return yes ? kOk : kMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric designs with socle PSU4(q): sieve, tables, constructions, group checks",
               "psu4d"};
  app.set_version_flag("--version", std::string(PSU4_VERSION));
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* sieve_cmd = app.add_subcommand("sieve", "Run the feasibility sieve over the subgroup catalog");
  sieve_cmd->add_option("--line", sieve.line, "Catalog line 1..16 or all")->capture_default_str();
  sieve_cmd->add_option("--pmax", sieve.p_max, "Largest prime p")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20))
      ->capture_default_str();
  sieve_cmd->add_option("--amax", sieve.a_max, "Largest exponent a")
      ->check(CLI::Range(1u, 62u))
      ->capture_default_str();
  sieve_cmd->add_option("--json", sieve.json_path, "Write the full report as JSON");
  sieve_cmd->add_flag("--no-timestamp", sieve.no_timestamp, "Omit the timestamp from JSON");
  sieve_cmd->add_option("--threads", sieve.threads, "Worker threads (0 = hardware)");

  int table_id = 0;
  auto* tables_cmd = app.add_subcommand("tables", "Recompute a bound table and compare it");
  tables_cmd->add_option("--table", table_id, "Table id: 3 4 6 7 8 9")->required();

  std::string kind;
  bool take_complement = false;
  std::string out_path;
  auto* construct_cmd = app.add_subcommand("construct", "Build and verify a design");
  construct_cmd->add_option("kind", kind, "menon36 | minus45 | higman40 | pg33")->required();
  construct_cmd->add_flag("--complement", take_complement, "Use the complementary design");
  construct_cmd->add_option("--out", out_path, "Output file (default: standard output)");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check the symmetric design axioms for a file");
  verify_cmd->add_option("file", verify_path)->required();

  std::vector<std::string> iso_paths;
  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two design files");
  iso_cmd->add_option("files", iso_paths)->required()->expected(2);

  std::string group_kind;
  std::string group_check = "flagtrans";
  bool base_design = false;
  auto* group_cmd = app.add_subcommand("group", "Group checks for a constructed design");
  group_cmd->add_option("--design", group_kind, "menon36 | minus45 | higman40 | pg33")->required();
  group_cmd->add_option("--check", group_check, "flagtrans | primitive | order | rank")
      ->check(CLI::IsMember({"flagtrans", "primitive", "order", "rank"}))
      ->capture_default_str();
  group_cmd->add_flag("--base", base_design,
                      "Use the base design for higman40/pg33 instead of the complement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*sieve_cmd) return cmd_sieve(sieve, command_echo(argc, argv), out, err);
    if (*tables_cmd) return cmd_tables(table_id, out, err);
    if (*construct_cmd) return cmd_construct(kind, take_complement, out_path, out, err);
    if (*verify_cmd) return cmd_verify(verify_path, out, err);
    if (*iso_cmd) return cmd_iso(iso_paths[0], iso_paths[1], out, err);
    if (*group_cmd) return cmd_group(group_kind, group_check, base_design, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace psu4
