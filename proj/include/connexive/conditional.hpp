#ifndef CONNEXIVE_CONDITIONAL_HPP
#define CONNEXIVE_CONDITIONAL_HPP

#include <string>

#include "connexive/formula.hpp"

namespace connexive {

// Three-valued semantics of "A given H": true when AH holds, false when
// ~A & H holds, void when H fails.
enum class TruthValue3 { True, False, Void };

// The set of coherent precise assessments on a single conditional event:
// {0} when AH is impossible, {1} when AH is equivalent to H, and the full
// unit interval otherwise.
enum class PointSet { Interval01, Zero, One };

class ConditionalEvent {
 public:
  const Formula& consequent() const { return consequent_; }
  const Formula& antecedent() const { return antecedent_; }

  // "(B | A)" -- the pipe lives inside mandatory parentheses, which keeps
  // it distinct from disjunction.
  std::string str() const {
    return "(" + consequent_.str() + " | " + antecedent_.str() + ")";
  }

 private:
  friend ConditionalEvent make_conditional(const Formula&, const Formula&,
                                           const LogicalRelations&);
  ConditionalEvent(Formula consequent, Formula antecedent)
      : consequent_(std::move(consequent)), antecedent_(std::move(antecedent)) {}
  Formula consequent_;
  Formula antecedent_;
};

// Throws DomainError when the antecedent is impossible under rel
// (conditioning on a contradiction is undefined).
ConditionalEvent make_conditional(const Formula& consequent,
                                  const Formula& antecedent,
                                  const LogicalRelations& rel);

TruthValue3 truth_value(const ConditionalEvent& ce, const Constituent& c);

// Inner negation: (~A)|H.  Peels a top-level negation, so applying it
// twice returns the original tree.
ConditionalEvent negate_conditional(const ConditionalEvent& ce);

PointSet coherent_point_set(const ConditionalEvent& ce,
                            const LogicalRelations& rel);

// Identification of A|H with (A&H)|H: equal consequent-and-antecedent and
// antecedent constituent sets.
bool canonical_equal(const ConditionalEvent& a, const ConditionalEvent& b,
                     const LogicalRelations& rel);

// Parses the surface syntax "( <formula> | <formula> )" and validates the
// antecedent.
ConditionalEvent parse_conditional(const std::string& text,
                                   const LogicalRelations& rel);

}  // namespace connexive

#endif  // CONNEXIVE_CONDITIONAL_HPP
