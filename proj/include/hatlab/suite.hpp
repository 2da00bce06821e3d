#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hatlab/gallery.hpp"

namespace hatlab {

/// Builders used by the reproduction suite; replaceable for fault injection.
struct SuiteHooks {
  std::function<GalleryGame()> delta6 = build_delta6_hg8;
  std::function<GalleryGame(int)> scary = build_scary;
  std::function<DeltaPlusK(int)> delta_plus_k = build_delta_plus_k;
  std::function<ChainBuild(int, int, ChainVariant)> chain = build_chain;
};

struct SuiteOptions {
  /// Criterion numbers, keys or groups; empty runs everything.
  std::vector<std::string> only;
  int jobs = 1;
  SuiteHooks hooks;
};

struct CriterionInfo {
  int id = 0;
  std::string key;
  /// Groups usable with --only, e.g. "roots".
  std::vector<std::string> groups;
  std::string title;
  /// Wall-clock budget; exceeding it fails the criterion.
  double budget_seconds = 0;
};

struct CriterionResult {
  CriterionInfo info;
  bool pass = false;
  /// Exact values and the first failed check, one item per line.
  std::vector<std::string> details;
  double seconds = 0;
};

std::vector<CriterionInfo> suite_criteria();
/// Throws ValidationError when a filter matches nothing.
std::vector<CriterionInfo> select_criteria(const std::vector<std::string>& only);
/// Results in criterion order, whatever the number of jobs.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);
CriterionResult run_criterion(const CriterionInfo& info, const SuiteHooks& hooks);
/// "[PASS] 3 scary: ... (0.42 s, budget 60 s)" followed by the details.
/// Without timing the text is identical across runs.
std::string format_result(const CriterionResult& r, bool with_timing = true);

}  // namespace hatlab
