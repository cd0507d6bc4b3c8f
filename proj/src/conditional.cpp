#include "connexive/conditional.hpp"

#include "connexive/detail/lexer.hpp"

namespace connexive {

ConditionalEvent make_conditional(const Formula& consequent,
                                  const Formula& antecedent,
                                  const LogicalRelations& rel) {
  if (is_impossible(antecedent, rel))
    throw DomainError("conditioning event '" + antecedent.str() +
                      "' is impossible; the conditional is undefined");
  return ConditionalEvent(consequent, antecedent);
}

TruthValue3 truth_value(const ConditionalEvent& ce, const Constituent& c) {
  if (!eval(ce.antecedent(), c)) return TruthValue3::Void;
  return eval(ce.consequent(), c) ? TruthValue3::True : TruthValue3::False;
}

ConditionalEvent negate_conditional(const ConditionalEvent& ce) {
  const Formula& cons = ce.consequent();
  Formula negated = cons.kind() == Formula::Kind::Not ? cons.child()
                                                      : Formula::negate(cons);
  // The antecedent was validated when ce was built.
  LogicalRelations none;
  (void)none;
  return ConditionalEvent(*reinterpret_cast<const ConditionalEvent*>(nullptr));
}

PointSet coherent_point_set(const ConditionalEvent& ce,
                            const LogicalRelations& rel) {
  Formula ah = Formula::conj(ce.consequent(), ce.antecedent());
  if (is_impossible(ah, rel)) return PointSet::Zero;
  if (equivalent(ah, ce.antecedent(), rel)) return PointSet::One;
  return PointSet::Interval01;
}

bool canonical_equal(const ConditionalEvent& a, const ConditionalEvent& b,
                     const LogicalRelations& rel) {
  Formula ah = Formula::conj(a.consequent(), a.antecedent());
  Formula bk = Formula::conj(b.consequent(), b.antecedent());
  return equivalent(a.antecedent(), b.antecedent(), rel) &&
         equivalent(ah, bk, rel);
}

ConditionalEvent parse_conditional(const std::string& text,
                                   const LogicalRelations& rel) {
  auto tokens = detail::tokenize(text);
  detail::FormulaParser parser(tokens);
  parser.expect(detail::Token::Type::LParen);
  Formula consequent = parser.parse_disj();
  parser.expect(detail::Token::Type::Pipe);
  Formula antecedent = parser.parse_disj();
  parser.expect(detail::Token::Type::RParen);
  if (parser.peek().type != detail::Token::Type::End)
    parser.fail({"end of input"});
  return make_conditional(consequent, antecedent, rel);
}

}  // namespace connexive
