#include "simplexball/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "simplexball/ellipsoid.hpp"
#include "simplexball/explorer.hpp"
#include "simplexball/format.hpp"
#include "simplexball/projector_norms.hpp"
#include "simplexball/sampling.hpp"
#include "simplexball/simplex_json.hpp"
#include "simplexball/suitability.hpp"

namespace simplexball::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ordered_json finding_json(const CriticalFinding& f) {
  ordered_json j;
  j["check"] = f.check;
  j["dim"] = f.dim;
  j["vertex"] = f.vertex ? ordered_json(*f.vertex + 1) : ordered_json(nullptr);
  j["exact_confirmed"] = f.exact_confirmed;
  j["detail"] = f.detail;
  j["vertices"] = f.vertices;
  return j;
}

// --- verify ------------------------------------------------------------------

struct VerifyFlags {
  int n = 3;
  long trials = 100;
  std::uint64_t seed = 1;
  std::string mode = "both";
  double near_eps = kNearBoundaryEps;
};

int run_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.n < 1) throw ArgumentError("--n must be >= 1");
  if (flags.trials < 1) throw ArgumentError("--trials must be >= 1");
  std::vector<SampleMode> modes;
  if (flags.mode == "both") {
    modes = {SampleMode::inscribed, SampleMode::in_ball};
  } else {
    modes = {parse_sample_mode(flags.mode)};
  }

  ordered_json report;
  report["n"] = flags.n;
  report["trials"] = flags.trials;
  report["seed"] = flags.seed;
  ordered_json suites = ordered_json::array();
  long total_violations = 0;
  for (SampleMode mode : modes) {
    TheoremCheck t1_total;
    TheoremCheck t2_total;
    auto merge = [](TheoremCheck& into, TheoremCheck&& from) {
      into.faces_checked += from.faces_checked;
      into.escalations += from.escalations;
      for (auto& v : from.violations) into.violations.push_back(std::move(v));
    };
    for (long t = 0; t < flags.trials; ++t) {
      // Inscribed and in-ball corpora use disjoint streams.
      const std::uint64_t stream = static_cast<std::uint64_t>(t) * 2 + (mode == SampleMode::in_ball ? 1 : 0);
      const Simplex<double> s = random_simplex(flags.n, mode, flags.seed, stream);
      merge(t1_total, check_theorem1(s, flags.near_eps));
      merge(t2_total, check_theorem2(s, flags.near_eps));
    }
    auto suite_json = [](const TheoremCheck& c) {
      ordered_json j;
      j["faces_checked"] = c.faces_checked;
      j["escalated"] = c.escalations;
      ordered_json v = ordered_json::array();
      for (const auto& f : c.violations) v.push_back(finding_json(f));
      j["violations"] = std::move(v);
      return j;
    };
    total_violations += static_cast<long>(t1_total.violations.size() + t2_total.violations.size());
    suites.push_back(ordered_json{{"mode", std::string(to_string(mode))},
                                  {"simplices", flags.trials},
                                  {"theorem1", suite_json(t1_total)},
                                  {"theorem2", suite_json(t2_total)}});
    err << "verify n=" << flags.n << " mode=" << to_string(mode) << ": " << flags.trials << " simplices, "
        << t1_total.violations.size() << " theorem-1 and " << t2_total.violations.size()
        << " theorem-2 exact-confirmed violations, " << (t1_total.escalations + t2_total.escalations)
        << " near-boundary escalations\n";
  }
  report["suites"] = std::move(suites);
  report["violations"] = total_violations;
  report["status"] = total_violations == 0 ? "clean" : "violation";
  out << report.dump(2) << '\n';
  return total_violations == 0 ? kOk : kViolation;
}

// --- explore -----------------------------------------------------------------

struct ExploreFlags {
  CampaignConfig cfg;
  std::string mode = "inscribed";
  std::string output;
  int threads = 0;
  bool failures_only = false;
};

int run_explore(ExploreFlags flags, std::ostream& out, std::ostream& err) {
  flags.cfg.mode = parse_sample_mode(flags.mode);
  flags.cfg.validate();
  std::ofstream file;
  std::ostream* records = nullptr;
  if (!flags.output.empty()) {
    file.open(flags.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file '" << flags.output << "'\n";
      return kIoError;
    }
    records = &file;
  }
  CampaignOptions options;
  options.threads = flags.threads;
  options.failures_only = flags.failures_only;
  const CampaignSummary summary = run_campaign(flags.cfg, records, options);
  out << to_json(summary) << '\n';
  err << "explore n=" << flags.cfg.n << " m=" << flags.cfg.m << " d=" << flags.cfg.d << ": " << summary.trials_run
      << " trials, " << summary.counterexample_candidates << " exact-confirmed counterexample candidates, "
      << summary.float_false_alarms << " float false alarms\n";
  return summary.aborted ? kIoError : kOk;
}

// --- theta -------------------------------------------------------------------

int run_theta(int min_n, int max_n, const std::string& format, std::ostream& out) {
  if (min_n < 1 || max_n < min_n) throw ArgumentError("theta needs 1 <= --min-n <= --max-n");
  if (format == "csv") {
    out << "n,a_n,k_n,tie,psi_a,psi_a1,theta,sqrt_n,sqrt_n1\n";
    for (int n = min_n; n <= max_n; ++n) {
      const ProjectorNorm p = projector_norm(n);
      out << n << ',' << p.a_n << ',' << p.k_n << ',' << (p.tie ? "true" : "false") << ','
          << format_double(p.psi_at_a) << ',' << format_double(p.psi_at_a_plus_1) << ',' << format_double(p.theta)
          << ',' << format_double(std::sqrt(static_cast<double>(n))) << ','
          << format_double(std::sqrt(static_cast<double>(n) + 1.0)) << '\n';
    }
    return kOk;
  }
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = min_n; n <= max_n; ++n) {
      const ProjectorNorm p = projector_norm(n);
      rows.push_back(ordered_json{{"n", n},
                                  {"a_n", p.a_n},
                                  {"k_n", p.k_n},
                                  {"tie", p.tie},
                                  {"psi_a", p.psi_at_a},
                                  {"psi_a1", p.psi_at_a_plus_1},
                                  {"theta", p.theta},
                                  {"sqrt_n", std::sqrt(static_cast<double>(n))},
                                  {"sqrt_n1", std::sqrt(static_cast<double>(n) + 1.0)}});
    }
    out << rows.dump(2) << '\n';
    return kOk;
  }
  throw ArgumentError("--format must be csv or json");
}

// --- ellipsoid ---------------------------------------------------------------

int run_ellipsoid(const std::string& input, bool oracle, const MveeOptions& mvee_options, std::ostream& out) {
  const AnySimplex simplex = parse_simplex_json(read_input(input));
  ordered_json result = std::visit(
      [](const auto& s) { return ordered_json::parse(ellipsoid_to_json(minimal_ellipsoid(s))); }, simplex);
  if (oracle) {
    // Khachiyan runs in floating point on the (rounded) vertices.
    std::vector<Point<double>> points;
    std::visit(
        [&](const auto& s) {
          for (const auto& v : s.vertices()) {
            Point<double> p(v.dim());
            for (std::size_t k = 0; k < v.dim(); ++k) {
              if constexpr (std::is_same_v<std::decay_t<decltype(v[k])>, double>) {
                p[k] = v[k];
              } else {
                p[k] = to_double(v[k]);
              }
            }
            points.push_back(std::move(p));
          }
        },
        simplex);
    const Simplex<double> float_simplex(points);
    const Ellipsoid<double> closed = minimal_ellipsoid(float_simplex);
    const MveeResult m = mvee(points, mvee_options);
    ordered_json j = ordered_json::parse(ellipsoid_to_json(m.ellipsoid));
    j["iterations"] = m.iterations;
    j["center_distance"] = std::sqrt(norm_sq(m.ellipsoid.center - closed.center));
    j["relative_volume_gap"] = std::abs(m.ellipsoid.volume() - closed.volume()) / closed.volume();
    result["oracle"] = std::move(j);
  }
  out << result.dump(2) << '\n';
  return kOk;
}

// --- faces -------------------------------------------------------------------

int run_faces(const std::string& input, std::optional<int> dim, bool exact, std::ostream& out) {
  AnySimplex simplex = parse_simplex_json(read_input(input));
  if (exact) {
    if (const auto* f = std::get_if<Simplex<double>>(&simplex)) simplex = exact_copy(*f);
  }
  SuitabilityReport report = build_suitability_report(simplex, dim);
  report.vertices_hash = vertices_hash(simplex);
  out << report_to_json(report) << '\n';
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplices in the unit ball: minimal ellipsoids, suitable faces, projector norms", "simplexball"};
  app.require_subcommand(1);

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check both existence theorems on a sampled corpus");
  verify->add_option("--n", verify_flags.n, "Dimension")->required();
  verify->add_option("--trials", verify_flags.trials, "Simplices per sampling mode");
  verify->add_option("--seed", verify_flags.seed, "Corpus seed");
  verify->add_option("--mode", verify_flags.mode, "inscribed, in-ball or both");
  verify->add_option("--near-eps", verify_flags.near_eps, "Exact recheck band around ||y||^2 = 1");

  ExploreFlags explore_flags;
  explore_flags.cfg.trials = 1000;
  auto* explore = app.add_subcommand("explore", "Search for faces that do not extend (conjecture campaign)");
  explore->add_option("--n", explore_flags.cfg.n, "Dimension")->required();
  explore->add_option("--m", explore_flags.cfg.m, "Dimension of the suitable face G")->required();
  explore->add_option("--d", explore_flags.cfg.d, "Target dimension")->required();
  explore->add_option("--trials", explore_flags.cfg.trials, "Number of sampled simplices");
  explore->add_option("--seed", explore_flags.cfg.seed, "Campaign seed");
  explore->add_option("--mode", explore_flags.mode, "inscribed or in-ball");
  explore->add_option("--near-eps", explore_flags.cfg.near_boundary_eps, "Exact recheck band");
  explore->add_option("--output", explore_flags.output, "JSONL record file");
  explore->add_option("--threads", explore_flags.threads, "Worker threads (default: SIMPLEXBALL_THREADS or all cores)");
  explore->add_flag("--failures-only", explore_flags.failures_only, "Only write trials with unextendable faces");

  int theta_min = 1;
  int theta_max = 20;
  std::string theta_format = "csv";
  auto* theta = app.add_subcommand("theta", "Table of minimal projector norms");
  theta->add_option("--min-n", theta_min, "First dimension");
  theta->add_option("--max-n", theta_max, "Last dimension");
  theta->add_option("--format", theta_format, "csv or json");

  std::string ell_input;
  bool ell_oracle = false;
  MveeOptions mvee_options;
  auto* ellipsoid = app.add_subcommand("ellipsoid", "Minimal ellipsoid of an input simplex");
  ellipsoid->add_option("--input", ell_input, "Simplex JSON file ('-' for stdin)")->required();
  ellipsoid->add_flag("--oracle", ell_oracle, "Compare against the Khachiyan iteration");
  ellipsoid->add_option("--eps", mvee_options.eps, "Khachiyan tolerance");
  ellipsoid->add_option("--max-iter", mvee_options.max_iter, "Khachiyan iteration cap");

  std::string faces_input;
  std::optional<int> faces_dim;
  bool faces_exact = false;
  auto* faces = app.add_subcommand("faces", "Suitable faces of an input simplex");
  faces->add_option("--input", faces_input, "Simplex JSON file ('-' for stdin)")->required();
  faces->add_option("--dim", faces_dim, "Face dimension (default: all)");
  faces->add_flag("--exact", faces_exact, "Decide float input in exact arithmetic");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify) return run_verify(verify_flags, out, err);
    if (*explore) return run_explore(explore_flags, out, err);
    if (*theta) return run_theta(theta_min, theta_max, theta_format, out);
    if (*ellipsoid) return run_ellipsoid(ell_input, ell_oracle, mvee_options, out);
    if (*faces) return run_faces(faces_input, faces_dim, faces_exact, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kNoInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateSimplexError& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace simplexball::cli
