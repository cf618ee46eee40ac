// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracle.hpp"
#include "psu4/catalog.hpp"
#include "psu4/cli.hpp"
#include "psu4/designs.hpp"
#include "psu4/permgroup.hpp"
#include "psu4/sieve.hpp"
#include "psu4/tables.hpp"

namespace {

using namespace psu4;

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string params_text(const std::string& v, const std::string& k, const std::string& l) {
  return "(" + v + "," + k + "," + l + ")";
}

Result catalog_consistency() {
  Result r;
  std::size_t checked = 0;
  for (const auto& pq : prime_powers_up_to(64)) {
    const Integer q = pq.q;
    const Integer c = gcd(Integer(2), q + 1);
    for (int line = 1; line <= 10; ++line) {
      for (const auto& sc : cases_for(line, pq)) {
        const Integer x = socle_order(pq);
        const Integer h0 = h0_order(sc, pq);
        const std::string at = "line " + std::to_string(line) + " q=" + q.str();
        r.require(x % h0 == 0, at + " |H0| does not divide |X|");
        const Integer v = x / h0;
        std::optional<Integer> closed;
        if (line == 1) closed = pow(q, 5) + pow(q, 3) + q * q + 1;
        if (line == 2) closed = (q + 1) * (pow(q, 3) + 1);
        if (line == 3) closed = pow(q, 3) * (q - 1) * (q * q + 1);
        if (line == 8) closed = q * q * (pow(q, 3) + 1) / c;
        if (closed) r.require(v == *closed, at + " v=" + v.str() + " != " + closed->str());
        ++checked;
      }
    }
  }
  r.require(checked > 200, "too few cases");
  if (r.pass) r.detail = std::to_string(checked) + " (line, q) cases exact";
  return r;
}

Result classification_scan() {
  Result r;
  const auto dir = std::filesystem::temp_directory_path() / "psu4d_acceptance";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "scan.json").string();
  const char* argv[] = {"psu4d", "sieve", "--line", "all", "--pmax", "13", "--amax", "3",
                        "--json", path.c_str(), "--no-timestamp"};
  std::ostringstream out, err;
  const int code = run_cli(11, argv, out, err);
  r.require(code == 0, "sieve exit code " + std::to_string(code));
  if (code != 0) return r;
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  std::filesystem::remove_all(dir);

  std::set<std::string> survivors, unresolved;
  for (const auto& s : j["survivors"]) {
    survivors.insert("line " + std::to_string(s["line"].get<int>()) + " q=" +
                     std::to_string(s["q"].get<std::uint64_t>()) + " " +
                     params_text(s["v"], s["k"], s["lambda"]));
  }
  for (const auto& s : j["unresolved"]) {
    unresolved.insert("line " + std::to_string(s["line"].get<int>()) + " q=" +
                      std::to_string(s["q"].get<std::uint64_t>()) + " " +
                      params_text(s["v"], s["k"], s["lambda"]));
  }
  const std::set<std::string> expected{"line 1 q=2 (45,12,3)", "line 3 q=2 (40,27,18)",
                                       "line 4 q=2 (40,27,18)", "line 8 q=2 (36,15,6)"};
  r.require(survivors == expected, "survivor set differs");
  const std::set<std::string> allowed{"line 6 q=4 (41600,2448,144)", "line 14 q=3 (1296,630,306)"};
  r.require(unresolved.count("line 6 q=4 (41600,2448,144)") == 1, "line 6 q=4 not flagged");
  for (const auto& u : unresolved) r.require(allowed.count(u) == 1, "extra unresolved " + u);
  if (r.pass) r.detail = "survivors exact, unresolved within the allowed set";
  return r;
}

Result table3_golden() {
  Result r;
  const std::vector<KBoundRow> expected{
      {2, Integer(40), Integer(1296)},
      {3, Integer(8505), Integer(3072)},
      {4, Integer(339456), Integer(12000)},
      {5, Integer(5687500), Integer(10368)},
      {8, Integer(1982955520), Integer(104976)},
  };
  r.require(table3() == expected, "rows differ");
  r.require(check_table(3).matches, "embedded comparison failed");
  if (r.pass) r.detail = "5 rows exact";
  return r;
}

Result table9_golden() {
  Result r;
  const auto t = table9();
  auto get = [&](int line) {
    const auto it = t.find(line);
    return it == t.end() ? std::vector<std::uint64_t>{} : it->second;
  };
  r.require(get(11) == std::vector<std::uint64_t>{7}, "line 11");
  r.require(get(12) == std::vector<std::uint64_t>{3}, "line 12");
  r.require(get(15) == std::vector<std::uint64_t>{3}, "line 15");
  r.require(get(16) == std::vector<std::uint64_t>{5, 11}, "line 16");
  const auto check = check_table(9);
  r.require(check.matches, "table 9 check failed");
  bool line13 = false, line14 = false;
  for (const auto& a : check.annotations) {
    line13 = line13 || a.find("line 13") != std::string::npos;
    line14 = line14 || a.find("line 14") != std::string::npos;
  }
  r.require(line13 || line14, "lines 13-14 divergence not annotated");
  if (r.pass) r.detail = "lines 11, 12, 15, 16 exact; " + std::to_string(check.annotations.size()) +
                         " divergence annotation(s)";
  return r;
}

Result constructions() {
  Result r;
  const std::vector<std::tuple<DesignKind, bool, SizeParams>> expected{
      {DesignKind::Menon36, false, {36, 15, 6}},  {DesignKind::Minus45, false, {45, 12, 3}},
      {DesignKind::Higman40, false, {40, 13, 4}}, {DesignKind::Pg33, false, {40, 13, 4}},
      {DesignKind::Higman40, true, {40, 27, 18}}, {DesignKind::Pg33, true, {40, 27, 18}},
  };
  for (const auto& [kind, comp, params] : expected) {
    auto d = build(kind);
    if (comp) d = complement(d);
    const auto v = verify_symmetric(d);
    r.require(v && *v.params == params,
              std::string(kind_name(kind)) + (comp ? " complement" : "") + " failed");
  }
  if (r.pass) r.detail = "6 designs verified";
  return r;
}

Result non_isomorphism() {
  Result r;
  const auto pg = complement(build(DesignKind::Pg33));
  const auto hig = complement(build(DesignKind::Higman40));
  r.require(!are_isomorphic(pg, hig).isomorphic, "(40,27,18) designs reported isomorphic");
  std::mt19937_64 rng(1);
  for (auto kind : {DesignKind::Menon36, DesignKind::Minus45, DesignKind::Higman40, DesignKind::Pg33}) {
    const auto d = build(kind);
    std::vector<std::size_t> perm(d.num_points());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto e = relabel(d, perm);
    const auto res = are_isomorphic(d, e);
    r.require(res.isomorphic && is_isomorphism(d, e, res.witness),
              std::string(kind_name(kind)) + " relabel self-test");
  }
  if (r.pass) r.detail = "non-isomorphic pair rejected; 4 relabel witnesses validated";
  return r;
}

Result group_checks() {
  Result r;
  const std::vector<std::tuple<DesignKind, bool>> cases{
      {DesignKind::Menon36, false}, {DesignKind::Minus45, false}, {DesignKind::Higman40, true}};
  std::string orders;
  for (const auto& [kind, comp] : cases) {
    const auto g = build_geometric(kind);
    const auto a = design_action(g);
    const auto d = comp ? complement(g.structure) : g.structure;
    const std::string name(kind_name(kind));
    r.require(is_transitive(a), name + " not transitive");
    if (!is_transitive(a)) continue;
    r.require(is_primitive(a), name + " not primitive");
    r.require(stabilizer_orbit_sizes(a, 0).size() == 3, name + " rank != 3");
    r.require(is_flag_transitive(a, d), name + " not flag-transitive");
    const Integer order = group_order(a);
    r.require(order == 25920 || order == 51840, name + " order " + order.str());
    r.require(order % flags(d).size() == 0, name + " flags do not divide order");
    orders += (orders.empty() ? "" : ", ") + name + " " + order.str();
  }
  if (r.pass) r.detail = "orders " + orders;
  return r;
}

Result oracle_equivalence() {
  Result r;
  std::size_t compared = 0;
  for (const auto& q : prime_powers(13, 3)) {
    for (const auto& c : cases_for(q)) {
      const Integer v = point_count(c, q);
      if (v > 1000000) continue;
      const auto sub = subdegree_divisors(c, q);
      const Integer kb = k_divisor_bound(c, q);
      const auto got = feasible_candidates(v, kb, sub.divisors, q.p, c.parabolic);
      std::set<std::uint64_t> ks;
      for (const auto& cand : got.candidates) ks.insert(cand.params.k.convert_to<std::uint64_t>());
      const auto expected =
          oracle::brute_force_k(v.convert_to<std::uint64_t>(), kb, sub.divisors, q.p, c.parabolic);
      r.require(ks == expected, "line " + std::to_string(c.line) + " q=" + std::to_string(q.q));
      ++compared;
    }
  }
  if (r.pass) r.detail = std::to_string(compared) + " cases with v <= 10^6 agree";
  return r;
}

Result square_spot_checks() {
  Result r;
  r.require(4 * 6 * 35 + 1 == 841 && is_perfect_square(Integer(841)), "841 not a square");
  const Params good{Integer(36), Integer(15), Integer(6)};
  const Params bad{Integer(36), Integer(15), Integer(7)};
  r.require(satisfies_symmetric_identities(good), "(36,15,6) rejected");
  r.require(!satisfies_symmetric_identities(bad), "(36,15,7) accepted");
  const std::vector<Integer> none;
  const auto res = feasible_candidates(Integer(36), Integer(1440), none, 2, false);
  bool has7 = false;
  for (const auto& c : res.candidates) has7 = has7 || c.params.lambda == 7;
  r.require(!has7, "sieve produced lambda = 7");
  if (r.pass) r.detail = "841 = 29^2 accepted; (36,15,7) rejected";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"catalog consistency", catalog_consistency},
      {"classification scan (p<=13, a<=3)", classification_scan},
      {"table 3 golden", table3_golden},
      {"table 9 golden", table9_golden},
      {"constructions", constructions},
      {"non-isomorphism", non_isomorphism},
      {"group checks", group_checks},
      {"sieve vs brute-force oracle", oracle_equivalence},
      {"square-condition spot checks", square_spot_checks},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    failures += res.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first
              << "]: " << (res.pass ? "PASS" : "FAIL") << " - " << res.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
