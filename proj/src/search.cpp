#include "tensemap/search.hpp"

#include <algorithm>
#include <cmath>

namespace tensemap {

ParameterSet sample_random(Rng& rng) {
  ParameterSet p;
  p.f1 = rng.uniform_int(0, 255);
  p.f2 = rng.uniform_int(0, 255);
  p.f3 = rng.uniform_int(0, 255);
  return p;
}

namespace {
int mutate_gene(int f, Rng& rng, double sigma) {
  const long step = std::lround(rng.normal(0.0, sigma));
  return std::clamp(f + static_cast<int>(step), 0, 255);
}
}  // namespace

ParameterSet mutate(const ParameterSet& p, Rng& rng, double sigma) {
  ParameterSet q;
  q.f1 = mutate_gene(p.f1, rng, sigma);
  q.f2 = mutate_gene(p.f2, rng, sigma);
  q.f3 = mutate_gene(p.f3, rng, sigma);
  return q;
}

std::vector<TrialRecord> run_map_elites(const SearchConfig& cfg,
                                        TrialEvaluator& evaluator,
                                        Archive& archive,
                                        const TrialSink& sink) {
  std::vector<TrialRecord> log;
  const int total = cfg.n_random + cfg.n_mutation;
  log.reserve(static_cast<std::size_t>(std::max(0, total - cfg.skip_trials)));
  const Rng base(cfg.seed);

  for (int t = cfg.skip_trials; t < total; ++t) {
    Rng trial_rng = base.fork(static_cast<std::uint64_t>(t));
    const bool random_phase = t < cfg.n_random;

    ParameterSet candidate;
    if (random_phase) {
      candidate = sample_random(trial_rng);
    } else {
      const Elite& parent = archive.select_uniform(trial_rng);
      candidate = mutate(parent.params, trial_rng, cfg.mutation_sigma);
    }

    TrialRecord record = evaluator.run_trial(
        candidate, cfg.first_trial_id + t,
        random_phase ? cfg.random_phase : cfg.mutation_phase);

    if (record.outcome != Outcome::Error) {
      archive.offer(record.params, record.behavior, record.trial_id,
                    record.phase);
    }
    if (sink) sink(record);
    log.push_back(record);

    if (record.outcome == Outcome::Error) {
      throw EvaluationAborted(record, "evaluation failed at trial " +
                                          std::to_string(record.trial_id) +
                                          ": " + record.message);
    }
  }
  return log;
}

}  // namespace tensemap
