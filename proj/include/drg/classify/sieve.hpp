#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drg/classify/family.hpp"

namespace drg::classify {

enum class Tri { Pass, Fail, NA };
std::string tri_name(Tri t);

struct FilterResult {
  std::string name;
  Tri verdict = Tri::NA;
};

/// Filter names in evaluation order.
const std::vector<std::string>& filter_names();

/// One (beta, mu) point of the diameter-3 family with every filter verdict.
struct CandidateRecord {
  BigInt beta;
  BigInt mu;
  Rational k, c2, c3;
  std::optional<IntersectionArray> array;
  std::optional<Rational> n;
  std::vector<Rational> thetas;                 // theta_0..theta_3 in Q-polynomial order
  std::vector<std::optional<Rational>> mults;   // aligned with thetas
  std::vector<FilterResult> filters;
  /// "KnownFamily:odd7", "KnownFamily:folded_cube7", "D3Family" or "Rejected".
  std::string verdict;
  /// First filter that did not pass; empty for survivors.
  std::string first_failure;

  Tri filter(const std::string& name) const;
  /// Single line of space-separated key=value fields.
  std::string to_line() const;
};

/// Ordered key/value pairs of a record line. Throws std::invalid_argument on
/// malformed input.
std::vector<std::pair<std::string, std::string>> parse_record_line(const std::string& line);

CandidateRecord evaluate_candidate(const BigInt& beta, const BigInt& mu);

struct SieveOptions {
  BigInt beta_min = -10;
  BigInt beta_max = -3;
  BigInt mu_max = 50;
  /// Allow beta >= -2.
  bool wide = false;
  /// 0: hardware concurrency capped by DRG_SPECTRA_THREADS.
  unsigned threads = 0;
};

/// Records in (beta, mu) lexicographic order. Throws std::invalid_argument on
/// an empty or disallowed range.
std::vector<CandidateRecord> sieve(const SieveOptions& opts);

struct SieveSummary {
  std::size_t total = 0;
  std::size_t survivors = 0;
  std::size_t known = 0;
  std::map<std::string, std::size_t> first_failures;
  std::string to_line() const;
};
SieveSummary summarize(const std::vector<CandidateRecord>& records);

/// Worker count: hardware concurrency, capped by DRG_SPECTRA_THREADS when set.
unsigned default_thread_count();

}  // namespace drg::classify
