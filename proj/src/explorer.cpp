#include "simplexball/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <json.hpp>
#include <thread>

namespace simplexball {

using ordered_json = nlohmann::ordered_json;

void CampaignConfig::validate() const {
  if (n < 2) throw ArgumentError("campaign needs n >= 2");
  if (m < 0 || m > n - 2) throw ArgumentError("campaign needs 0 <= m <= n-2");
  if (d < m + 1 || d > n - 1) throw ArgumentError("campaign needs m+1 <= d <= n-1");
  if (trials < 1) throw ArgumentError("campaign needs trials >= 1");
  if (!(near_boundary_eps >= 0.0)) throw ArgumentError("near-boundary eps must be nonnegative");
}

ProbeRecord conjecture_probe(const Simplex<double>& s, int m, int d, double near_boundary_eps) {
  const int n = s.dim();
  CampaignConfig{n, m, d, 1, 0, SampleMode::inscribed, near_boundary_eps}.validate();
  if (max_vertex_norm_sq(s) > 1.0 + kSuitableTolerance) throw ArgumentError("simplex is not contained in the unit ball");

  ProbeRecord record;
  record.n = n;
  record.m = m;
  record.d = d;
  CertifiedSuitability oracle(s, near_boundary_eps);

  for_each_face(s.vertex_count(), m + 1, [&](const FaceIndex& g) {
    if (!oracle.suitable(g)) return true;
    ++record.suitable_m_faces;
    ExtensionVerdict verdict{g, std::nullopt};
    for_each_superset(g, d + 1, [&](const FaceIndex& f) {
      if (oracle.suitable(f)) verdict.witness = f;
      return !verdict.witness;
    });
    if (!verdict.witness) {
      // Re-decide the face and all of its extensions exactly.
      bool confirmed = oracle.exact_suitable(g);
      if (confirmed) {
        for_each_superset(g, d + 1, [&](const FaceIndex& f) {
          if (oracle.exact_suitable(f)) verdict.witness = f;
          return !verdict.witness;
        });
        confirmed = !verdict.witness;
      }
      if (confirmed) {
        record.unextendable.push_back(g);
      } else {
        ++record.float_false_alarms;
      }
    }
    record.verdicts.push_back(std::move(verdict));
    return true;
  });
  record.exact_confirmed = !record.unextendable.empty();
  record.escalations = oracle.escalations();
  return record;
}

std::string to_jsonl(const ProbeRecord& record) {
  ordered_json j;
  j["trial"] = record.trial;
  j["n"] = record.n;
  j["m"] = record.m;
  j["d"] = record.d;
  j["suitable_m_faces"] = record.suitable_m_faces;
  ordered_json faces = ordered_json::array();
  for (const auto& f : record.unextendable) faces.push_back(f.one_based());
  j["unextendable"] = std::move(faces);
  j["exact_confirmed"] = record.exact_confirmed;
  j["regen"] = ordered_json{{"seed", record.seed}, {"trial", record.trial}};
  return j.dump();
}

std::string to_json(const CampaignSummary& summary) {
  const auto& cfg = summary.config;
  ordered_json j;
  j["status"] = summary.aborted ? "aborted" : "complete";
  j["partial"] = summary.aborted;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["d"] = cfg.d;
  j["mode"] = std::string(to_string(cfg.mode));
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["trials_run"] = summary.trials_run;
  j["suitable_m_faces"] = summary.suitable_m_faces;
  j["near_boundary_escalations"] = summary.escalations;
  j["float_false_alarms"] = summary.float_false_alarms;
  j["counterexample_candidates"] = summary.counterexample_candidates;
  j["trials_with_candidates"] = summary.trials_with_candidates;
  j["records_written"] = summary.records_written;
  if (!summary.error.empty()) j["error"] = summary.error;
  return j.dump(2);
}

int default_thread_count() {
  if (const char* env = std::getenv("SIMPLEXBALL_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream* records, const CampaignOptions& options) {
  cfg.validate();
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  CampaignSummary summary;
  summary.config = cfg;

  // Trials run in chunks; each chunk is computed in parallel, then written in
  // trial order so the stream does not depend on scheduling.
  constexpr long kChunk = 512;
  std::vector<ProbeRecord> chunk;
  for (long begin = 0; begin < cfg.trials && !summary.aborted; begin += kChunk) {
    const long end = std::min(cfg.trials, begin + kChunk);
    chunk.assign(static_cast<std::size_t>(end - begin), ProbeRecord{});
    std::atomic<long> next{begin};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (long t = next++; t < end && !failed; t = next++) {
        try {
          const Simplex<double> s = random_simplex(cfg.n, cfg.mode, cfg.seed, static_cast<std::uint64_t>(t));
          ProbeRecord r = conjecture_probe(s, cfg.m, cfg.d, cfg.near_boundary_eps);
          r.trial = t;
          r.seed = cfg.seed;
          chunk[static_cast<std::size_t>(t - begin)] = std::move(r);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    };
    const int workers = static_cast<int>(std::min<long>(threads, end - begin));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < workers; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& r : chunk) {
      ++summary.trials_run;
      summary.suitable_m_faces += r.suitable_m_faces;
      summary.escalations += r.escalations;
      summary.float_false_alarms += r.float_false_alarms;
      summary.counterexample_candidates += static_cast<long>(r.unextendable.size());
      if (!r.unextendable.empty()) ++summary.trials_with_candidates;
      if (records == nullptr || (options.failures_only && r.unextendable.empty())) continue;
      *records << to_jsonl(r) << '\n';
      if (!*records) {
        summary.aborted = true;
        summary.error = "write to record stream failed after " + std::to_string(summary.records_written) + " records";
        break;
      }
      ++summary.records_written;
    }
  }
  if (records != nullptr && !summary.aborted) {
    records->flush();
    if (!*records) {
      summary.aborted = true;
      summary.error = "flushing record stream failed";
    }
  }
  return summary;
}

}  // namespace simplexball
