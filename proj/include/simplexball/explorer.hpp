#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "simplexball/sampling.hpp"
#include "simplexball/suitability.hpp"

namespace simplexball {

/// Search parameters for the face-extension conjecture: every suitable face G
/// of dimension m should extend to a suitable face of dimension d containing G.
struct CampaignConfig {
  int n = 0;
  int m = 0;
  int d = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::inscribed;
  double near_boundary_eps = kNearBoundaryEps;

  /// n >= 2, 0 <= m <= n-2, m+1 <= d <= n-1, trials >= 1. Throws ArgumentError.
  void validate() const;
};

/// One suitable m-face and how (whether) it extends.
struct ExtensionVerdict {
  FaceIndex face;
  std::optional<FaceIndex> witness;
};

struct ProbeRecord {
  long trial = 0;
  int n = 0;
  int m = 0;
  int d = 0;
  int suitable_m_faces = 0;
  std::vector<ExtensionVerdict> verdicts;
  /// Suitable m-faces with no suitable d-dimensional superset, confirmed exactly.
  std::vector<FaceIndex> unextendable;
  /// True when `unextendable` is nonempty and every entry was rechecked exactly.
  bool exact_confirmed = false;
  int escalations = 0;
  /// Float verdicts of "unextendable" that the exact recheck overturned.
  int float_false_alarms = 0;
  std::uint64_t seed = 0;
};

/// Checks every suitable m-face of `s` for a suitable d-dimensional superset.
/// Float failures are re-decided on the exact dyadic copy of `s` before they
/// are recorded.
ProbeRecord conjecture_probe(const Simplex<double>& s, int m, int d, double near_boundary_eps = kNearBoundaryEps);

/// The JSONL line for a record (no trailing newline).
std::string to_jsonl(const ProbeRecord& record);

struct CampaignOptions {
  /// Worker threads; 0 picks SIMPLEXBALL_THREADS or the hardware concurrency.
  int threads = 0;
  /// Write only trials with unextendable faces.
  bool failures_only = false;
};

struct CampaignSummary {
  CampaignConfig config;
  long trials_run = 0;
  long suitable_m_faces = 0;
  long escalations = 0;
  long float_false_alarms = 0;
  long counterexample_candidates = 0;
  long trials_with_candidates = 0;
  long records_written = 0;
  bool aborted = false;
  std::string error;
};

std::string to_json(const CampaignSummary& summary);

/// Runs cfg.trials probes, each on random_simplex(n, mode, seed, trial), and
/// streams one JSONL record per trial in trial order to `records` (if given).
/// Output is independent of the thread count. A failed write stops the
/// campaign and marks the summary as aborted.
CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream* records, const CampaignOptions& options = {});

/// Thread count from SIMPLEXBALL_THREADS, else hardware concurrency (>= 1).
int default_thread_count();

}  // namespace simplexball
