#include "psu4/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace psu4 {

namespace {

// Deeper stages win when summarizing why a case died.
int stage(Reason r) {
  switch (r) {
    case Reason::NoKDivisor: return 0;
    case Reason::LambdaBoundFail: return 1;
    case Reason::SquareFail: return 2;
    case Reason::SubdegFail: return 3;
    case Reason::TitsFail: return 4;
    case Reason::CubePrefilter: return 5;
  }
  return 0;
}

std::string describe(const Candidate& c, const Integer& k_bound,
                     const std::vector<std::pair<Integer, Integer>>& subdeg_ratios) {
  const auto& [v, k, lambda] = c.params;
  std::ostringstream os;
  os << "k=" << k << " divides " << k_bound << "; lambda=k(k-1)/(v-1)=" << lambda
     << "; lambda*v=" << lambda * v << "<k^2=" << k * k << "; 4*lambda*(v-1)+1=("
     << boost::multiprecision::sqrt(Integer(4 * lambda * (v - 1) + 1)) << ")^2";
  for (const auto& [d, m] : subdeg_ratios) os << "; subdegree bound " << d << ": lambda*D/k=" << m;
  return os.str();
}

std::string unresolved_note(int line, const PrimePower& q) {
  if (line == 6 && q.q == 4)
    return "excluding it needs the subdegrees of the degree-41600 action of PSU_4(4) and its "
           "extensions; not decidable by divisibility";
  if (line >= 11)
    return "passes the cube bound and every divisibility test; exclusion needs "
           "group-theoretic input beyond this sieve";
  return "arithmetically feasible; no certificate of nonexistence from divisibility";
}

}  // namespace

std::string_view reason_code(Reason r) {
  switch (r) {
    case Reason::NoKDivisor: return "NO_K_DIVISOR";
    case Reason::SquareFail: return "SQUARE_FAIL";
    case Reason::SubdegFail: return "SUBDEG_FAIL";
    case Reason::LambdaBoundFail: return "LAMBDA_BOUND_FAIL";
    case Reason::TitsFail: return "TITS_FAIL";
    case Reason::CubePrefilter: return "CUBE_PREFILTER";
  }
  return "?";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Eliminated: return "eliminated";
    case Status::Survivor: return "survivor";
    case Status::Unresolved: return "unresolved";
  }
  return "?";
}

FeasibilityResult feasible_candidates(const Integer& v, const Integer& k_bound,
                                      std::span<const Integer> subdegrees, std::uint64_t p,
                                      bool parabolic) {
  if (v < 4) throw std::invalid_argument("feasible_candidates: v must be >= 4");
  if (k_bound < 1) throw std::invalid_argument("feasible_candidates: k_bound must be >= 1");

  FeasibilityResult result;
  const Integer v1 = v - 1;
  if (!parabolic && gcd(Integer(p), v1) != 1) {
    result.tits_failed = true;
    return result;
  }

  std::vector<Integer> bounds(subdegrees.begin(), subdegrees.end());
  if (parabolic) {
    for (auto& d : bounds) d = gcd(d, v1);
  }

  for (const Integer& k : divisors(factorize(k_bound))) {
    if (k <= 2 || k >= v1) {
      result.rejections.push_back({k, Reason::NoKDivisor});
      continue;
    }
    const Integer kk = k * (k - 1);
    if (kk % v1 != 0) {
      result.rejections.push_back({k, Reason::NoKDivisor});
      continue;
    }
    const Integer lambda = kk / v1;
    if (!(lambda < k) || !(lambda * v < k * k)) {
      result.rejections.push_back({k, Reason::LambdaBoundFail});
      continue;
    }
    if (!is_perfect_square(4 * lambda * v1 + 1)) {
      result.rejections.push_back({k, Reason::SquareFail});
      continue;
    }
    std::vector<std::pair<Integer, Integer>> ratios;
    bool subdeg_ok = true;
    for (const Integer& d : bounds) {
      const Integer ld = lambda * d;
      if (ld % k != 0) {
        subdeg_ok = false;
        break;
      }
      ratios.emplace_back(d, ld / k);
    }
    if (!subdeg_ok) {
      result.rejections.push_back({k, Reason::SubdegFail});
      continue;
    }
    Candidate c{Params{v, k, lambda}, {}};
    c.trace = describe(c, k_bound, ratios);
    result.candidates.push_back(std::move(c));
  }
  return result;
}

bool cube_prefilter(int line, const PrimePower& q) {
  if (line < 11 || line > kLastLine)
    throw std::invalid_argument("cube_prefilter: line must be in 11..16");
  const auto cases = cases_for(line, q);
  if (cases.empty()) throw std::invalid_argument("cube_prefilter: line not applicable at q");
  const Integer h0 = h0_order(cases.front(), q);
  const Integer out = out_order(q);
  return socle_order(q) <= out * out * h0 * h0 * h0;
}

const std::vector<Params>& reference_parameters() {
  static const std::vector<Params> params{
      {Integer(36), Integer(15), Integer(6)},
      {Integer(40), Integer(27), Integer(18)},
      {Integer(45), Integer(12), Integer(3)},
  };
  return params;
}

bool is_reference(const Params& p) {
  const auto& ref = reference_parameters();
  return std::find(ref.begin(), ref.end(), p) != ref.end();
}

CaseOutcome scan_case(const SubgroupCase& c, const PrimePower& q) {
  CaseOutcome out;
  out.line = c.line;
  out.q = q;
  out.subfield = c.subfield;
  out.v = point_count(c, q);
  out.k_bound = k_divisor_bound(c, q);

  if (c.line >= 11 && !cube_prefilter(c.line, q)) {
    out.status = Status::Eliminated;
    out.reason = Reason::CubePrefilter;
    return out;
  }

  const SubdegreeData sub = subdegree_divisors(c, q);
  FeasibilityResult fr = feasible_candidates(out.v, out.k_bound, sub.divisors, q.p, c.parabolic);
  if (fr.tits_failed) {
    out.status = Status::Eliminated;
    out.reason = Reason::TitsFail;
    return out;
  }
  for (const auto& r : fr.rejections) ++out.rejection_counts[r.reason];

  if (fr.candidates.empty()) {
    out.status = Status::Eliminated;
    Reason deepest = Reason::NoKDivisor;
    for (const auto& [reason, count] : out.rejection_counts) {
      if (stage(reason) > stage(deepest)) deepest = reason;
    }
    out.reason = deepest;
    return out;
  }

  out.status = Status::Survivor;
  for (auto& cand : fr.candidates) {
    const Status s = is_reference(cand.params) ? Status::Survivor : Status::Unresolved;
    if (s == Status::Unresolved) out.status = Status::Unresolved;
    out.candidates.push_back({std::move(cand), s});
  }
  if (out.status == Status::Unresolved) out.note = unresolved_note(c.line, q);
  return out;
}

std::vector<CaseOutcome> scan_line(int line, const PrimePower& q) {
  std::vector<CaseOutcome> out;
  for (const auto& c : cases_for(line, q)) out.push_back(scan_case(c, q));
  return out;
}

namespace {

auto outcome_key(const CaseOutcome& o) {
  return std::make_tuple(o.line, o.q.q, o.subfield ? o.subfield->r : 0u);
}

std::vector<Survivor> collect(const std::vector<CaseOutcome>& outcomes, Status wanted) {
  std::vector<Survivor> out;
  for (const auto& o : outcomes) {
    for (const auto& c : o.candidates) {
      if (c.status == wanted) out.push_back({o.line, o.q.q, c.candidate.params});
    }
  }
  return out;
}

}  // namespace

std::vector<Survivor> ScanReport::survivors() const { return collect(outcomes, Status::Survivor); }

std::vector<Survivor> ScanReport::unresolved() const {
  return collect(outcomes, Status::Unresolved);
}

ScanReport scan_all(const ScanOptions& options) {
  if (options.p_max < 2) throw std::invalid_argument("scan_all: p_max must be >= 2");
  if (options.a_max < 1) throw std::invalid_argument("scan_all: a_max must be >= 1");

  std::vector<std::pair<SubgroupCase, PrimePower>> work;
  for (const auto& q : prime_powers(options.p_max, options.a_max)) {
    for (const auto& c : cases_for(q)) {
      if (!options.line || *options.line == c.line) work.emplace_back(c, q);
    }
  }

  std::vector<CaseOutcome> outcomes(work.size());
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, std::max<std::size_t>(work.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < work.size(); i = next++)
            outcomes[i] = scan_case(work[i].first, work[i].second);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::sort(outcomes.begin(), outcomes.end(),
            [](const auto& l, const auto& r) { return outcome_key(l) < outcome_key(r); });
  return ScanReport{options.p_max, options.a_max, std::move(outcomes)};
}

}  // namespace psu4
