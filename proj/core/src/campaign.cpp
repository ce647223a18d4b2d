#include "pocsa/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "pocsa/csa.hpp"
#include "pocsa/errors.hpp"
#include "pocsa/po_csa.hpp"
#include "pocsa/report.hpp"

namespace pocsa {

namespace {

using json = nlohmann::ordered_json;

std::string rotation_file_name(const CampaignConfig& c) {
  return "rotation_" + std::to_string(c.function) + "_" + std::to_string(c.dim) + ".txt";
}

std::string trace_file_name(std::size_t run_index) {
  return "trace_" + std::to_string(run_index) + ".csv";
}

json config_json(const CampaignConfig& c) {
  json j = json::object();
  for (const auto& [key, value] : config_entries(c)) j[key] = value;
  return j;
}

json summary_json(const Summary& s) {
  return json{{"count", s.count}, {"mean", s.mean},     {"median", s.median},
              {"min", s.min},     {"max", s.max},       {"stddev", s.stddev}};
}

json run_json(const RunRecord& r, std::size_t index, bool traced) {
  json j{{"index", index},
         {"seed", r.seed},
         {"t_gen_0", r.t_gen_0},
         {"final_best_energy", r.final_best_energy()},
         {"best_coords", r.best.coords},
         {"eval_count", r.eval_count},
         {"iterations", r.iterations},
         {"wall_seconds", r.wall_seconds}};
  if (traced) j["trace_file"] = trace_file_name(index);
  if (!r.sweep_members.empty()) {
    json members = json::array();
    for (const auto& m : r.sweep_members) {
      members.push_back({{"seed", m.seed},
                         {"t_gen_0", m.t_gen_0},
                         {"final_best_energy", m.final_best_energy()},
                         {"eval_count", m.eval_count}});
    }
    j["sweep_members"] = std::move(members);
    j["selected_member"] = r.selected_member;
  }
  return j;
}

void ensure_valid(const CampaignConfig& config) {
  const auto errors = validate(config);
  if (errors.empty()) return;
  std::string msg;
  for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
  throw ConfigError(msg);
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

}  // namespace

std::uint64_t run_seed(std::uint64_t campaign_seed, std::size_t run_index) noexcept {
  return derive_seed(campaign_seed, run_index);
}

bench::BenchmarkSpec campaign_benchmark(const CampaignConfig& config) {
  bench::BenchmarkSpec spec{config.function, config.dim, std::nullopt};
  if (bench::info(config.function).rotated) {
    spec.rotation = generate_rotation(config.dim, config.effective_rotation_seed(),
                                      config.rotation_count);
  }
  return spec;
}

RunRecord run_single(const CampaignConfig& c, const ObjectiveFunction& objective,
                     std::uint64_t seed) {
  const TraceOptions trace{c.trace || c.trace_members, c.trace_members};
  switch (c.algorithm) {
    case Algorithm::csa:
    case Algorithm::r_csa:
    case Algorithm::b_csa: {
      CsaConfig cfg;
      cfg.optimizers = c.effective_optimizers();
      cfg.budget_per_optimizer = c.budget_per_optimizer;
      cfg.t_ac_0 = c.tac0;
      cfg.alpha = c.alpha;
      if (c.algorithm == Algorithm::csa) cfg.t_gen_0 = c.tgen0;
      if (c.algorithm == Algorithm::b_csa) return run_bcsa_sweep(objective, cfg, seed, trace);
      return run_csa(objective, cfg, seed, trace);
    }
    case Algorithm::po_csa: {
      PoCsaConfig cfg;
      cfg.optimizers = c.effective_optimizers();
      cfg.budget_per_optimizer = c.budget_per_optimizer;
      cfg.t_ac_0 = c.tac0;
      cfg.alpha = c.alpha;
      cfg.orbit = OrbitParams{c.beta, c.phi, c.mu};
      cfg.delta = c.delta;
      cfg.initial_t_gen = c.tgen0;
      return run_po_csa(objective, cfg, seed, trace);
    }
  }
  throw ConfigError("unknown algorithm");
}

std::vector<double> CampaignResult::finals() const {
  std::vector<double> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(r.final_best_energy());
  return out;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  ensure_valid(config);
  CampaignResult result;
  result.config = config;
  bench::BenchmarkSpec spec = campaign_benchmark(config);
  result.rotation = spec.rotation;
  const ObjectiveFunction objective = bench::make_objective(std::move(spec));
  result.objective_name = objective.name();
  result.runs.resize(config.runs);

  std::vector<std::exception_ptr> failures(config.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.runs; i = next++) {
      try {
        result.runs[i] = run_single(config, objective, run_seed(config.seed, i));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(config.threads, config.runs);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  result.summary = summarize(result.finals());
  return result;
}

void write_campaign(const CampaignResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const CampaignConfig& c = result.config;

  json manifest;
  manifest["config"] = config_json(c);
  manifest["objective"] = result.objective_name;
  manifest["boundary_policy"] = "clamp";
  manifest["rng"] = "mt19937_64 seeded by seed_seq(seed, stream_id); stream 0 master, 1..m optimizers";
  if (result.rotation) {
    const std::string name = rotation_file_name(c);
    save_rotation(*result.rotation, (dir / name).string());
    manifest["rotation"] = {{"file", name},
                            {"seed", result.rotation->seed()},
                            {"planar_rotations", c.rotation_count}};
  } else {
    manifest["rotation"] = nullptr;
  }
  json runs = json::array();
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    const RunRecord& r = result.runs[i];
    runs.push_back(run_json(r, i, r.trace.has_value()));
    if (r.trace) {
      auto out = open_output(dir / trace_file_name(i));
      write_trace_csv(out, *r.trace, c, r.seed);
    }
  }
  manifest["runs"] = std::move(runs);
  manifest["summary"] = summary_json(result.summary);
  {
    auto out = open_output(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
  }
  auto out = open_output(dir / "summary.csv");
  write_summary_header(out);
  write_summary_row(out, make_summary_row(c, result.summary));
}

CampaignConfig sweep_member_config(const CampaignConfig& config, std::size_t j) {
  CampaignConfig member = config;
  member.algorithm = Algorithm::csa;
  member.tgen0 = kSweepTemperatures.at(j);
  member.seed = sweep_member_seed(config.seed, j);
  member.rotation_seed = config.effective_rotation_seed();
  return member;
}

SweepResult sweep_tgen(const CampaignConfig& config) {
  ensure_valid(config);
  if (config.algorithm != Algorithm::b_csa)
    throw ConfigError("sweep requires algorithm b-csa");
  SweepResult result;
  result.config = config;
  for (std::size_t j = 0; j < kSweepTemperatures.size(); ++j) {
    result.members.push_back(run_campaign(sweep_member_config(config, j)));
  }
  for (std::size_t j = 1; j < result.members.size(); ++j) {
    if (result.members[j].summary.mean < result.members[result.selected].summary.mean)
      result.selected = j;
  }
  return result;
}

void write_sweep(const SweepResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["config"] = config_json(result.config);
  json members = json::array();
  for (std::size_t j = 0; j < result.members.size(); ++j) {
    const CampaignResult& m = result.members[j];
    const std::string sub = "tgen_" + format_double(*m.config.tgen0);
    write_campaign(m, dir / sub);
    members.push_back({{"t_gen_0", *m.config.tgen0},
                       {"seed", m.config.seed},
                       {"directory", sub},
                       {"summary", summary_json(m.summary)}});
  }
  manifest["members"] = std::move(members);
  manifest["selected"] = {
      {"index", result.selected},
      {"t_gen_0", *result.members[result.selected].config.tgen0},
      {"mean", result.members[result.selected].summary.mean}};
  {
    auto out = open_output(dir / "sweep_manifest.json");
    out << manifest.dump(2) << '\n';
  }
  auto out = open_output(dir / "sweep_summary.csv");
  out << kSummaryHeader << ",tgen0,selected\n";
  for (std::size_t j = 0; j < result.members.size(); ++j) {
    const CampaignResult& m = result.members[j];
    SummaryRow row = make_summary_row(m.config, m.summary);
    row.algorithm = "b-csa";
    out << format_summary_row(row) << ',' << format_double(*m.config.tgen0) << ','
        << (j == result.selected ? 1 : 0) << '\n';
  }
}

}  // namespace pocsa
