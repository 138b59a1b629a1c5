#include "teamlogic/closure.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <thread>

#include "teamlogic/bisimulation.hpp"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/errors.hpp"

namespace teamlogic {

std::string_view to_string(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::Downward: return "downward";
    case ClosureProperty::Union: return "union";
    case ClosureProperty::EmptyTeam: return "empty-team";
    case ClosureProperty::BisimInvariance: return "bisim-invariance";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxTeamWorlds = 20;
constexpr std::size_t kChunk = 2048;

struct Evaluated {
  std::shared_ptr<const KripkeModel> model;
  std::vector<char> sat;  // sat[mask], or only sat[0] when teams are not needed
};

// Streams the domain in chunks, evaluating f on every team (or only the
// empty team) of each model, possibly in parallel, and hands the chunk to
// `scan` in enumeration order. `scan` returns true to stop.
template <typename Scan>
std::uint64_t for_each_evaluated(const Formula& f, const Domain& domain, const ClosureOptions& opts,
                                 bool all_teams, Scan&& scan) {
  if (all_teams && domain.max_worlds > kMaxTeamWorlds) {
    throw BudgetExceeded("team enumeration beyond " + std::to_string(kMaxTeamWorlds) + " worlds");
  }
  ModelStream stream(domain.max_worlds, domain.props);
  std::uint64_t checked = 0;
  const unsigned threads = std::max(1U, opts.threads);
  while (true) {
    std::vector<Evaluated> chunk;
    while (chunk.size() < kChunk) {
      auto k = stream.next();
      if (!k) break;
      chunk.push_back({std::make_shared<const KripkeModel>(std::move(*k)), {}});
    }
    if (chunk.empty()) break;

    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < chunk.size(); i += step) {
        Evaluator ev(*chunk[i].model, opts.eval);
        const std::uint64_t teams = all_teams ? std::uint64_t{1} << chunk[i].model->size() : 1;
        chunk[i].sat.resize(teams);
        for (std::uint64_t mask = 0; mask < teams; ++mask) {
          chunk[i].sat[mask] = ev.eval(Team::from_bits(mask), f) ? 1 : 0;
        }
      }
    };
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            work(t, threads);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (const Evaluated& e : chunk) checked += e.sat.size();
    if (scan(chunk)) break;
  }
  return checked;
}

Instance make_instance(const KripkeModel& k, std::uint64_t mask, bool satisfies) {
  return {k, Team::from_bits(mask), satisfies};
}

}  // namespace

ClosureReport check_downward(const Formula& f, const Domain& domain, const ClosureOptions& opts) {
  ClosureReport report;
  report.property = ClosureProperty::Downward;
  report.instances_checked = for_each_evaluated(f, domain, opts, true, [&](const std::vector<Evaluated>& chunk) {
    for (const Evaluated& e : chunk) {
      for (std::uint64_t t = 0; t < e.sat.size(); ++t) {
        if (!e.sat[t]) continue;
        // submasks of t in increasing order
        for (std::uint64_t s = 0;; s = (s - t) & t) {
          if (!e.sat[s]) {
            report.passed = false;
            report.counterexample = Counterexample{
                {make_instance(*e.model, t, true), make_instance(*e.model, s, false)}, std::nullopt};
            return true;
          }
          if (s == t) break;
        }
      }
    }
    return false;
  });
  return report;
}

ClosureReport check_union(const Formula& f, const Domain& domain, const ClosureOptions& opts) {
  ClosureReport report;
  report.property = ClosureProperty::Union;
  report.instances_checked = for_each_evaluated(f, domain, opts, true, [&](const std::vector<Evaluated>& chunk) {
    for (const Evaluated& e : chunk) {
      for (std::uint64_t a = 0; a < e.sat.size(); ++a) {
        if (!e.sat[a]) continue;
        for (std::uint64_t b = a + 1; b < e.sat.size(); ++b) {
          if (e.sat[b] && !e.sat[a | b]) {
            report.passed = false;
            report.counterexample =
                Counterexample{{make_instance(*e.model, a, true), make_instance(*e.model, b, true),
                                make_instance(*e.model, a | b, false)},
                               std::nullopt};
            return true;
          }
        }
      }
    }
    return false;
  });
  return report;
}

ClosureReport check_empty_team(const Formula& f, const Domain& domain, const ClosureOptions& opts) {
  ClosureReport report;
  report.property = ClosureProperty::EmptyTeam;
  report.instances_checked = for_each_evaluated(f, domain, opts, false, [&](const std::vector<Evaluated>& chunk) {
    for (const Evaluated& e : chunk) {
      if (!e.sat[0]) {
        report.passed = false;
        report.counterexample = Counterexample{{make_instance(*e.model, 0, false)}, std::nullopt};
        return true;
      }
    }
    return false;
  });
  return report;
}

ClosureReport check_bisim_invariance(const Formula& f, unsigned k, const Domain& domain,
                                     const ClosureOptions& opts) {
  if (k > domain.max_k) {
    throw FormulaError("bisimulation depth " + std::to_string(k) + " exceeds the domain bound " +
                       std::to_string(domain.max_k));
  }
  ClosureReport report;
  report.property = ClosureProperty::BisimInvariance;
  BisimTypes types(domain.props);
  struct Seen {
    std::shared_ptr<const KripkeModel> model;
    std::uint64_t mask;
    bool verdict;
  };
  std::map<std::vector<std::size_t>, Seen> first;
  report.instances_checked = for_each_evaluated(f, domain, opts, true, [&](const std::vector<Evaluated>& chunk) {
    for (const Evaluated& e : chunk) {
      const std::vector<std::size_t> classes = types.classes(*e.model, k);
      for (std::uint64_t mask = 0; mask < e.sat.size(); ++mask) {
        const bool verdict = e.sat[mask] != 0;
        auto sig = types.signature(classes, Team::from_bits(mask));
        auto [it, fresh] = first.try_emplace(std::move(sig), Seen{e.model, mask, verdict});
        if (fresh || it->second.verdict == verdict) continue;
        Instance earlier = make_instance(*it->second.model, it->second.mask, it->second.verdict);
        Instance later = make_instance(*e.model, mask, verdict);
        if (!team_k_bisimilar(earlier.model, earlier.team, later.model, later.team, k)) {
          throw Error("internal error: bisimulation classes disagree with team_k_bisimilar");
        }
        report.passed = false;
        if (verdict) std::swap(earlier, later);
        report.counterexample = Counterexample{{std::move(earlier), std::move(later)}, k};
        return true;
      }
    }
    return false;
  });
  return report;
}

bool recheck(const Formula& f, const Counterexample& c, const EvalConfig& config) {
  for (const Instance& part : c.parts) {
    if (eval(part.model, part.team, f, config) != part.satisfies) return false;
  }
  return true;
}

}  // namespace teamlogic
