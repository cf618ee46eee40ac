#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psu4/catalog.hpp"
#include "psu4/exactmath.hpp"
#include "psu4/params.hpp"

namespace psu4 {

using Params = DesignParams<Integer>;

enum class Reason {
  NoKDivisor,
  SquareFail,
  SubdegFail,
  LambdaBoundFail,
  TitsFail,
  CubePrefilter,
};

enum class Status { Eliminated, Survivor, Unresolved };

std::string_view reason_code(Reason r);
std::string_view status_name(Status s);

struct Candidate {
  Params params;
  std::string trace;
};

struct Rejection {
  Integer k;
  Reason reason;
};

struct FeasibilityResult {
  /// Ascending in k.
  std::vector<Candidate> candidates;
  /// One entry per divisor of the k-bound that was rejected.
  std::vector<Rejection> rejections;
  /// gcd(p, v-1) != 1 on a non-parabolic case; nothing else was tried.
  bool tits_failed = false;
};

/// Every divisor k of k_bound with 2 < k < v-1 such that
///  (i)   (v-1) | k(k-1), lambda = k(k-1)/(v-1);
///  (ii)  lambda < k;  (iii) lambda v < k^2;
///  (iv)  4 lambda (v-1) + 1 is a square;
///  (v)   k | lambda D for each D in subdegrees, with D -> gcd(D, v-1) when
///        parabolic (the p-power subdegree case).
/// A non-parabolic case with gcd(p, v-1) != 1 is rejected outright.
FeasibilityResult feasible_candidates(const Integer& v, const Integer& k_bound,
                                      std::span<const Integer> subdegrees, std::uint64_t p,
                                      bool parabolic);

/// |X| <= |Out(X)|^2 |H0|^3 for lines 11..16.
bool cube_prefilter(int line, const PrimePower& q);

/// The parameter triples of the known flag-transitive designs.
const std::vector<Params>& reference_parameters();
bool is_reference(const Params& p);

struct ClassifiedCandidate {
  Candidate candidate;
  Status status = Status::Unresolved;
};

struct CaseOutcome {
  int line = 0;
  PrimePower q;
  std::optional<Subfield> subfield;
  Integer v;
  Integer k_bound;
  Status status = Status::Eliminated;
  /// Set when status is Eliminated.
  std::optional<Reason> reason;
  std::vector<ClassifiedCandidate> candidates;
  std::map<Reason, std::size_t> rejection_counts;
  std::string note;
};

CaseOutcome scan_case(const SubgroupCase& c, const PrimePower& q);
/// All variants of a line at q (line 7 may have several).
std::vector<CaseOutcome> scan_line(int line, const PrimePower& q);

struct Survivor {
  int line = 0;
  std::uint64_t q = 0;
  Params params;

  friend bool operator==(const Survivor&, const Survivor&) = default;
  friend std::strong_ordering operator<=>(const Survivor&, const Survivor&) = default;
};

struct ScanReport {
  std::uint64_t p_max = 0;
  unsigned a_max = 0;
  /// Sorted by (line, q, r); one entry per applicable case.
  std::vector<CaseOutcome> outcomes;

  std::vector<Survivor> survivors() const;
  std::vector<Survivor> unresolved() const;
};

struct ScanOptions {
  std::uint64_t p_max = 2;
  unsigned a_max = 1;
  /// Restrict to one line; all lines otherwise.
  std::optional<int> line;
  /// 0 picks hardware concurrency.
  unsigned threads = 0;
};

ScanReport scan_all(const ScanOptions& options);
inline ScanReport scan_all(std::uint64_t p_max, unsigned a_max) {
  return scan_all(ScanOptions{p_max, a_max, std::nullopt, 0});
}

}  // namespace psu4
