#include "generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace teamlogic::testing {

Formula FormulaGen::literal() {
  std::uniform_int_distribution<int> kind(0, 19);
  const int k = kind(rng_);
  if (k == 0) return Formula::top();
  if (k == 1) return Formula::bot();
  std::uniform_int_distribution<std::size_t> pick(0, spec_.props.size() - 1);
  const std::string& p = spec_.props[pick(rng_)];
  return k % 2 == 0 ? Formula::prop(p) : Formula::neg_prop(p);
}

Formula FormulaGen::gen(std::size_t size, int depth, bool pure) {
  if (size <= 1) return literal();
  enum Choice { Dia, Box, Nab, And, Or, NeDisj, Incl };
  std::vector<Choice> options;
  if (depth > 0) {
    options.push_back(Dia);
    options.push_back(Box);
  }
  // Mixed draws from every extension and keeps only formulas using two.
  const bool mixed = spec_.dialect == Dialect::Mixed;
  if (!pure && (mixed || spec_.dialect == Dialect::MLNab)) options.push_back(Nab);
  if (size >= 3) {
    options.push_back(And);
    options.push_back(Or);
    if (!pure && (mixed || spec_.dialect == Dialect::MLNeDisj)) options.push_back(NeDisj);
    if (!pure && (mixed || spec_.dialect == Dialect::MINC)) {
      options.push_back(Incl);
      options.push_back(Incl);
    }
  }
  if (options.empty()) return literal();
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  const Choice c = options[pick(rng_)];
  auto split = [&](std::size_t total) {
    std::uniform_int_distribution<std::size_t> left(1, total - 1);
    return left(rng_);
  };
  switch (c) {
    case Dia: return Formula::dia(gen(size - 1, depth - 1, pure));
    case Box: return Formula::box(gen(size - 1, depth - 1, pure));
    case Nab: return Formula::nab(gen(size - 1, depth, pure));
    case And:
    case Or:
    case NeDisj: {
      const std::size_t l = split(size - 1);
      Formula a = gen(l, depth, pure);
      Formula b = gen(size - 1 - l, depth, pure);
      if (c == And) return Formula::conj(a, b);
      if (c == Or) return Formula::disj(a, b);
      return Formula::nedisj(a, b);
    }
    case Incl: {
      const std::size_t arity = size >= 5 && rng_() % 2 == 0 ? 2 : 1;
      std::size_t budget = size - 1;
      std::vector<Formula> lhs, rhs;
      for (std::size_t i = 0; i < 2 * arity; ++i) {
        const std::size_t after = 2 * arity - i - 1;
        const std::size_t most = std::min<std::size_t>(3, budget - after);
        const std::size_t take = std::uniform_int_distribution<std::size_t>(1, most)(rng_);
        budget -= take;
        (i < arity ? lhs : rhs).push_back(gen(take, depth, true));
      }
      return Formula::incl(std::move(lhs), std::move(rhs));
    }
  }
  return literal();
}

Formula FormulaGen::next() {
  std::uniform_int_distribution<std::size_t> size(1, spec_.max_nodes);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Formula f = gen(size(rng_), spec_.max_depth, spec_.dialect == Dialect::ML);
    if (dialect_of(f) == spec_.dialect && f.node_count() <= spec_.max_nodes && modal_depth(f) <= spec_.max_depth) {
      return f;
    }
  }
  throw std::runtime_error("formula generator made no progress");
}

std::vector<Formula> distinct_formulas(const GenSpec& spec, std::size_t count, std::uint64_t seed) {
  FormulaGen gen(spec, seed);
  std::unordered_set<Formula> seen;
  std::vector<Formula> out;
  for (std::size_t attempts = 0; out.size() < count; ++attempts) {
    if (attempts > 1000 * count) throw std::runtime_error("not enough distinct formulas for the bounds");
    Formula f = gen.next();
    if (seen.insert(f).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace teamlogic::testing
