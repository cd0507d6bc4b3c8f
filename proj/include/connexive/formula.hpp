#ifndef CONNEXIVE_FORMULA_HPP
#define CONNEXIVE_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "connexive/error.hpp"

namespace connexive {

// Propositional formulas over named atomic events, with TOP (the sure
// event) and BOT (the impossible event).  Values are immutable trees; a
// Formula is a cheap shared handle and safe to copy across threads.
//
// Surface grammar (ASCII, whitespace ignored between tokens):
//   formula  := disj ;
//   disj     := conj { "|" conj } ;
//   conj     := neg  { "&" neg } ;
//   neg      := "~" neg | atomexpr ;
//   atomexpr := IDENT | "TOP" | "BOT" | "(" formula ")" ;
//   IDENT    := [A-Za-z][A-Za-z0-9_]*   excluding TOP, BOT, given
class Formula {
 public:
  enum class Kind { Atom, Top, Bot, Not, And, Or };

  static Formula atom(const std::string& name);
  static Formula top();
  static Formula bot();
  static Formula negate(const Formula& f);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula disj(const Formula& a, const Formula& b);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }  // Atom only
  Formula child() const { return Formula(node_->left); }   // Not only
  Formula left() const { return Formula(node_->left); }    // And/Or
  Formula right() const { return Formula(node_->right); }  // And/Or

  bool structurally_equal(const Formula& other) const;
  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  // Minimal-parenthesis rendering; parse_formula(str()) reproduces the
  // tree exactly (binary nodes are left-associated, as the parser builds).
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula parse_formula(const std::string& text);

// A finite set of formulas declared impossible.  Equivalences are encoded
// by the caller as "A xor B is impossible" expansions; one normal form
// keeps the constituent filter a plain evaluation.
struct LogicalRelations {
  std::vector<Formula> impossible;

  bool empty() const { return impossible.empty(); }
  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const auto& f : impossible) f.collect_atoms(out);
    return out;
  }
};

// Total truth assignment over a fixed, lexicographically sorted atom list.
class Constituent {
 public:
  Constituent(std::shared_ptr<const std::vector<std::string>> atoms,
              std::vector<bool> values)
      : atoms_(std::move(atoms)), values_(std::move(values)) {}

  const std::vector<std::string>& atoms() const { return *atoms_; }
  // Throws DomainError when the atom is not assigned here.
  bool value(const std::string& atom) const;
  bool operator==(const Constituent& other) const {
    return *atoms_ == *other.atoms_ && values_ == other.values_;
  }

  // Conjunction-of-literals rendering, e.g. "A & ~B".
  std::string str() const;

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
  std::vector<bool> values_;
};

bool eval(const Formula& f, const Constituent& c);

// All total valuations of `atoms` falsifying every relation formula, in a
// deterministic order: atoms sorted by name, true enumerated before false,
// first atom most significant.  Relation atoms must be covered by `atoms`.
// Throws DomainError when no constituent survives (inadmissible relations)
// or when `atoms` is empty.
std::vector<Constituent> constituents(const std::set<std::string>& atoms,
                                      const LogicalRelations& rel);

// True iff f evaluates false under every constituent of the universe
// spanned by atoms(f) and atoms(rel).
bool is_impossible(const Formula& f, const LogicalRelations& rel);

// Same satisfying constituent set over the joint atom universe.
bool equivalent(const Formula& f, const Formula& g,
                const LogicalRelations& rel);

// A fixed problem universe: sorted atoms, the active relations, and the
// surviving constituents.  Shared immutably by everything downstream.
struct Universe {
  std::vector<std::string> atoms;
  LogicalRelations relations;
  std::vector<Constituent> constituents;

  // Indices of constituents satisfying f.
  std::vector<std::size_t> satisfying(const Formula& f) const;
};

std::shared_ptr<const Universe> make_universe(const std::set<std::string>& atoms,
                                              const LogicalRelations& rel);

}  // namespace connexive

#endif  // CONNEXIVE_FORMULA_HPP
