#include "teamlogic/rewrite.hpp"

#include "teamlogic/errors.hpp"

namespace teamlogic {

namespace {

template <typename Leaf>
Formula rebuild(const Formula& f, Leaf&& replace) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bot:
    case Op::Prop:
    case Op::NegProp: return f;
    case Op::Incl: throw FormulaError("rewrite does not apply to inclusion atoms");
    case Op::And: return Formula::conj(rebuild(f.child(0), replace), rebuild(f.child(1), replace));
    case Op::Or: return Formula::disj(rebuild(f.child(0), replace), rebuild(f.child(1), replace));
    case Op::Dia: return Formula::dia(rebuild(f.child(0), replace));
    case Op::Box: return Formula::box(rebuild(f.child(0), replace));
    case Op::Nab:
    case Op::NeDisj: {
      std::vector<Formula> kids;
      for (const Formula& k : f.children()) kids.push_back(rebuild(k, replace));
      return replace(f.op(), kids);
    }
  }
  return f;
}

}  // namespace

Formula nabla_to_nedis(const Formula& f) {
  if (f.has_incl()) throw FormulaError("rewrite does not apply to inclusion atoms");
  return rebuild(f, [](Op op, std::vector<Formula>& kids) {
    if (op == Op::Nab) return Formula::nedisj(kids[0], Formula::top());
    return Formula::nedisj(kids[0], kids[1]);
  });
}

Formula nedis_to_nabla(const Formula& f) {
  if (f.has_incl()) throw FormulaError("rewrite does not apply to inclusion atoms");
  return rebuild(f, [](Op op, std::vector<Formula>& kids) {
    if (op == Op::Nab) return Formula::nab(kids[0]);
    return Formula::conj(Formula::disj(kids[0], kids[1]),
                         Formula::conj(Formula::nab(kids[0]), Formula::nab(kids[1])));
  });
}

}  // namespace teamlogic
