#include "teamlogic/formula.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "teamlogic/errors.hpp"

namespace teamlogic {

namespace detail {

struct Node {
  Op op;
  std::string symbol;
  std::vector<Formula> kids;
  std::size_t arity = 0;
  std::size_t hash = 0;
  std::size_t size = 1;
  int depth = 0;
  std::size_t nabs = 0;
  bool incl = false;
  bool nab = false;
  bool nedisj = false;
};

}  // namespace detail

namespace {

constexpr std::string_view kKeywords[] = {"dia", "box", "nab", "top", "bot"};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool structurally_equal(const detail::Node& a, const detail::Node& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash || a.op != b.op || a.size != b.size || a.arity != b.arity ||
      a.symbol != b.symbol || a.kids.size() != b.kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!(a.kids[i] == b.kids[i])) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Dialect d) {
  switch (d) {
    case Dialect::ML: return "ML";
    case Dialect::MINC: return "MINC";
    case Dialect::MLNab: return "MLNab";
    case Dialect::MLNeDisj: return "MLNeDisj";
    case Dialect::Mixed: return "Mixed";
  }
  return "?";
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  if (!std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); })) return false;
  return std::find(std::begin(kKeywords), std::end(kKeywords), s) == std::end(kKeywords);
}

Formula Formula::make(Op op, std::string symbol, std::vector<Formula> kids, std::size_t arity) {
  auto node = std::make_shared<detail::Node>();
  node->op = op;
  std::size_t h = std::hash<std::string>{}(symbol);
  h = mix(h, static_cast<std::size_t>(op) + 1);
  h = mix(h, arity);
  for (const Formula& k : kids) {
    const detail::Node& kn = *k.node_;
    h = mix(h, kn.hash);
    node->size += kn.size;
    node->depth = std::max(node->depth, kn.depth);
    node->nabs += kn.nabs;
    node->incl = node->incl || kn.incl;
    node->nab = node->nab || kn.nab;
    node->nedisj = node->nedisj || kn.nedisj;
  }
  switch (op) {
    case Op::Dia:
    case Op::Box: node->depth += 1; break;
    case Op::Nab:
      node->nab = true;
      node->nabs += 1;
      break;
    case Op::NeDisj: node->nedisj = true; break;
    case Op::Incl: node->incl = true; break;
    default: break;
  }
  node->hash = h;
  node->symbol = std::move(symbol);
  node->kids = std::move(kids);
  node->arity = arity;
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula t = make(Op::Top, {}, {}, 0);
  return t;
}

Formula Formula::bot() {
  static const Formula b = make(Op::Bot, {}, {}, 0);
  return b;
}

Formula Formula::prop(std::string name) {
  if (!is_identifier(name)) throw FormulaError("invalid proposition symbol '" + name + "'");
  return make(Op::Prop, std::move(name), {}, 0);
}

Formula Formula::neg_prop(std::string name) {
  if (!is_identifier(name)) throw FormulaError("invalid proposition symbol '" + name + "'");
  return make(Op::NegProp, std::move(name), {}, 0);
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return make(Op::And, {}, {std::move(lhs), std::move(rhs)}, 0);
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return make(Op::Or, {}, {std::move(lhs), std::move(rhs)}, 0);
}

Formula Formula::nedisj(Formula lhs, Formula rhs) {
  return make(Op::NeDisj, {}, {std::move(lhs), std::move(rhs)}, 0);
}

Formula Formula::dia(Formula sub) { return make(Op::Dia, {}, {std::move(sub)}, 0); }
Formula Formula::box(Formula sub) { return make(Op::Box, {}, {std::move(sub)}, 0); }
Formula Formula::nab(Formula sub) { return make(Op::Nab, {}, {std::move(sub)}, 0); }

Formula Formula::incl(std::vector<Formula> lhs, std::vector<Formula> rhs) {
  if (lhs.empty() || rhs.empty()) throw FormulaError("inclusion atom with an empty side");
  if (lhs.size() != rhs.size()) {
    throw FormulaError("inclusion atom arity mismatch: " + std::to_string(lhs.size()) + " vs " +
                       std::to_string(rhs.size()));
  }
  for (const auto* side : {&lhs, &rhs}) {
    for (const Formula& f : *side) {
      if (f.has_incl()) throw FormulaError("nested inclusion atom");
      if (!f.is_pure_ml()) throw FormulaError("inclusion atom argument is not a modal formula");
    }
  }
  std::size_t n = lhs.size();
  std::vector<Formula> kids = std::move(lhs);
  kids.insert(kids.end(), std::make_move_iterator(rhs.begin()), std::make_move_iterator(rhs.end()));
  return make(Op::Incl, {}, std::move(kids), n);
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::symbol() const { return node_->symbol; }
std::span<const Formula> Formula::children() const { return node_->kids; }

std::span<const Formula> Formula::lhs() const {
  return std::span<const Formula>(node_->kids).first(node_->arity);
}

std::span<const Formula> Formula::rhs() const {
  return std::span<const Formula>(node_->kids).subspan(node_->arity);
}

std::size_t Formula::arity() const { return node_->arity; }
std::size_t Formula::node_count() const { return node_->size; }
bool Formula::is_pure_ml() const { return !node_->incl && !node_->nab && !node_->nedisj; }
bool Formula::has_incl() const { return node_->incl; }
bool Formula::has_nab() const { return node_->nab; }
bool Formula::has_nedisj() const { return node_->nedisj; }
std::size_t Formula::hash() const { return node_->hash; }
int Formula::depth() const { return node_->depth; }
std::size_t Formula::nabla_count() const { return node_->nabs; }

bool operator==(const Formula& a, const Formula& b) {
  return structurally_equal(*a.node_, *b.node_);
}

Formula FormulaInterner::intern(const Formula& f) {
  std::unordered_map<const void*, Formula> done;
  auto go = [&](auto&& self, const Formula& g) -> Formula {
    if (auto it = done.find(g.id()); it != done.end()) return it->second;
    std::vector<Formula> kids;
    for (const Formula& c : g.children()) kids.push_back(self(self, c));
    Formula rebuilt = [&] {
      switch (g.op()) {
        case Op::And: return Formula::conj(kids[0], kids[1]);
        case Op::Or: return Formula::disj(kids[0], kids[1]);
        case Op::NeDisj: return Formula::nedisj(kids[0], kids[1]);
        case Op::Dia: return Formula::dia(kids[0]);
        case Op::Box: return Formula::box(kids[0]);
        case Op::Nab: return Formula::nab(kids[0]);
        case Op::Incl: {
          const auto mid = kids.begin() + static_cast<std::ptrdiff_t>(g.arity());
          return Formula::incl({kids.begin(), mid}, {mid, kids.end()});
        }
        default: return g;
      }
    }();
    Formula canonical = *table_.insert(std::move(rebuilt)).first;
    done.emplace(g.id(), canonical);
    return canonical;
  };
  return go(go, f);
}

Formula conjoin(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

Formula disjoin(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::bot();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disj(acc, parts[i]);
  return acc;
}

// Both are computed bottom-up at construction: Dia/Box add one to the depth,
// every other node takes the max over its children (inclusion atoms over all
// arguments, Nab over its body).
int modal_depth(const Formula& f) { return f.depth(); }
std::size_t occ_nabla(const Formula& f) { return f.nabla_count(); }

Dialect dialect_of(const Formula& f) {
  const bool incl = f.has_incl();
  const bool nab = f.has_nab();
  const bool nedisj = f.has_nedisj();
  if (incl && (nab || nedisj)) return Dialect::Mixed;
  if (incl) return Dialect::MINC;
  if (nab && nedisj) return Dialect::Mixed;
  if (nab) return Dialect::MLNab;
  if (nedisj) return Dialect::MLNeDisj;
  return Dialect::ML;
}

std::vector<std::string> props_of(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::unordered_set<const void*> visited;  // shared subformulas are walked once
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (!visited.insert(cur->id()).second) continue;
    if (cur->op() == Op::Prop || cur->op() == Op::NegProp) {
      if (seen.insert(cur->symbol()).second) out.push_back(cur->symbol());
    }
    auto kids = cur->children();
    for (std::size_t i = kids.size(); i-- > 0;) stack.push_back(&kids[i]);
  }
  return out;
}

Position Position::child(std::uint32_t i) const {
  Position p = *this;
  p.path.push_back(i);
  return p;
}

std::string Position::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

Position Position::parse(std::string_view text) {
  Position p;
  if (text.empty()) return p;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view part = text.substr(start, dot == std::string_view::npos ? text.size() - start : dot - start);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw FormulaError("malformed position '" + std::string(text) + "'");
    }
    p.path.push_back(v);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

namespace {

void collect_positions(const Formula& f, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  auto kids = f.children();
  for (std::uint32_t i = 0; i < kids.size(); ++i) {
    cur.path.push_back(i);
    collect_positions(kids[i], cur, out);
    cur.path.pop_back();
  }
}

}  // namespace

std::vector<Position> positions(const Formula& f) {
  std::vector<Position> out;
  out.reserve(f.node_count());
  Position cur;
  collect_positions(f, cur, out);
  return out;
}

const Formula& subformula_at(const Formula& f, const Position& pos) {
  const Formula* cur = &f;
  for (std::uint32_t i : pos.path) {
    if (i >= cur->children().size()) {
      throw FormulaError("position " + pos.to_string() + " does not address a node");
    }
    cur = &cur->children()[i];
  }
  return *cur;
}

}  // namespace teamlogic
