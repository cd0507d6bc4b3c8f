#include "connexive/formula.hpp"

#include <algorithm>
#include <sstream>

#include "connexive/detail/lexer.hpp"

namespace connexive {

Formula Formula::atom(const std::string& name) {
  if (name.empty()) throw DomainError("atom name must be nonempty");
  return Formula(std::make_shared<Node>(Node{Kind::Atom, name, nullptr, nullptr}));
}
Formula Formula::top() {
  return Formula(std::make_shared<Node>(Node{Kind::Top, "", nullptr, nullptr}));
}
Formula Formula::bot() {
  return Formula(std::make_shared<Node>(Node{Kind::Bot, "", nullptr, nullptr}));
}
Formula Formula::negate(const Formula& f) {
  return Formula(std::make_shared<Node>(Node{Kind::Not, "", f.node_, nullptr}));
}
Formula Formula::conj(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<Node>(Node{Kind::And, "", a.node_, b.node_}));
}
Formula Formula::disj(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, "", a.node_, b.node_}));
}

bool Formula::structurally_equal(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Atom:
      return a->name == b->name;
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::Not:
      return Formula(a->left).structurally_equal(Formula(b->left));
    case Kind::And:
    case Kind::Or:
      return Formula(a->left).structurally_equal(Formula(b->left)) &&
             Formula(a->right).structurally_equal(Formula(b->right));
  }
  return false;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Atom:
      out.insert(name());
      break;
    case Kind::Top:
    case Kind::Bot:
      break;
    case Kind::Not:
      child().collect_atoms(out);
      break;
    case Kind::And:
    case Kind::Or:
      left().collect_atoms(out);
      right().collect_atoms(out);
      break;
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

namespace {

// Precedence: Or = 1, And = 2, Not = 3, leaves = 4.  A child is wrapped in
// parentheses when its precedence is below the context, and on the right
// side also when equal, so right-nested chains round-trip unchanged.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
  }
}

void print(const Formula& f, int context, std::ostream& os) {
  int prec = precedence(f.kind());
  bool parens = prec < context;
  if (parens) os << "(";
  switch (f.kind()) {
    case Formula::Kind::Atom: os << f.name(); break;
    case Formula::Kind::Top: os << "TOP"; break;
    case Formula::Kind::Bot: os << "BOT"; break;
    case Formula::Kind::Not:
      os << "~";
      print(f.child(), precedence(Formula::Kind::Not), os);
      break;
    case Formula::Kind::And:
      print(f.left(), prec, os);
      os << " & ";
      print(f.right(), prec + 1, os);
      break;
    case Formula::Kind::Or:
      print(f.left(), prec, os);
      os << " | ";
      print(f.right(), prec + 1, os);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string Formula::str() const {
  std::ostringstream os;
  print(*this, 0, os);
  return os.str();
}

Formula parse_formula(const std::string& text) {
  auto tokens = detail::tokenize(text);
  detail::FormulaParser parser(tokens);
  Formula f = parser.parse_disj();
  if (parser.peek().type != detail::Token::Type::End)
    parser.fail({"end of input"});
  return f;
}

// ---------------------------------------------------------------------------
// Constituents.

bool Constituent::value(const std::string& atom) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), atom);
  if (it == atoms_->end() || *it != atom)
    throw DomainError("atom '" + atom + "' is not assigned in this constituent");
  return values_[static_cast<std::size_t>(it - atoms_->begin())];
}

std::string Constituent::str() const {
  if (atoms_->empty()) return "TOP";
  std::ostringstream os;
  for (std::size_t i = 0; i < atoms_->size(); ++i) {
    if (i > 0) os << " & ";
    if (!values_[i]) os << "~";
    os << (*atoms_)[i];
  }
  return os.str();
}

bool eval(const Formula& f, const Constituent& c) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return c.value(f.name());
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Not: return !eval(f.child(), c);
    case Formula::Kind::And: return eval(f.left(), c) && eval(f.right(), c);
    case Formula::Kind::Or: return eval(f.left(), c) || eval(f.right(), c);
  }
  return false;
}

namespace {

constexpr std::size_t kMaxAtoms = 16;  // plain enumeration; desk scale

// Enumeration shared by constituents() and the formula-level checks, which
// must also work over the empty universe (single empty assignment).
std::vector<Constituent> enumerate(const std::set<std::string>& atoms,
                                   const LogicalRelations& rel) {
  if (atoms.size() > kMaxAtoms)
    throw DomainError("too many atoms (" + std::to_string(atoms.size()) +
                      "); enumeration is capped at " + std::to_string(kMaxAtoms));
  auto names = std::make_shared<std::vector<std::string>>(atoms.begin(), atoms.end());
  std::size_t n = names->size();
  std::vector<Constituent> out;
  // true before false per atom, first atom most significant: counter bit 0
  // means "true" when clear.
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<bool> values(n);
    for (std::size_t i = 0; i < n; ++i)
      values[i] = ((code >> (n - 1 - i)) & 1) == 0;
    Constituent c(names, std::move(values));
    bool alive = true;
    for (const auto& f : rel.impossible)
      if (eval(f, c)) {
        alive = false;
        break;
      }
    if (alive) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Constituent> constituents(const std::set<std::string>& atoms,
                                      const LogicalRelations& rel) {
  if (atoms.empty()) throw DomainError("constituents: atom set is empty");
  for (const auto& f : rel.impossible) {
    for (const auto& a : f.atoms())
      if (!atoms.count(a))
        throw DomainError("relation formula mentions undeclared atom '" + a + "'");
  }
  auto out = enumerate(atoms, rel);
  if (out.empty())
    throw DomainError("inadmissible logical relations: no constituent survives");
  return out;
}

bool is_impossible(const Formula& f, const LogicalRelations& rel) {
  std::set<std::string> atoms = f.atoms();
  for (const auto& a : rel.atoms()) atoms.insert(a);
  auto cs = enumerate(atoms, rel);
  if (cs.empty())
    throw DomainError("inadmissible logical relations: no constituent survives");
  for (const auto& c : cs)
    if (eval(f, c)) return false;
  return true;
}

bool equivalent(const Formula& f, const Formula& g, const LogicalRelations& rel) {
  std::set<std::string> atoms = f.atoms();
  for (const auto& a : g.atoms()) atoms.insert(a);
  for (const auto& a : rel.atoms()) atoms.insert(a);
  auto cs = enumerate(atoms, rel);
  if (cs.empty())
    throw DomainError("inadmissible logical relations: no constituent survives");
  for (const auto& c : cs)
    if (eval(f, c) != eval(g, c)) return false;
  return true;
}

std::vector<std::size_t> Universe::satisfying(const Formula& f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < constituents.size(); ++i)
    if (eval(f, constituents[i])) out.push_back(i);
  return out;
}

std::shared_ptr<const Universe> make_universe(const std::set<std::string>& atoms,
                                              const LogicalRelations& rel) {
  auto u = std::make_shared<Universe>();
  u->atoms.assign(atoms.begin(), atoms.end());
  u->relations = rel;
  u->constituents = constituents(atoms, rel);
  return u;
}

}  // namespace connexive
