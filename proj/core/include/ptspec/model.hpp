#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptspec/polynomial.hpp"
#include "ptspec/rational.hpp"

namespace ptspec {

struct SourcePos {
  int line = 1;
  int column = 1;
};

// Expression tree over numbers, the imaginary unit, parameter and operator
// references, + - * / ^ and negation. Immutable; children are shared.
struct Expr {
  enum class Kind { Number, Imaginary, Parameter, Operator, Negate, Add, Sub, Mul, Div, Pow };

  Kind kind;
  SourcePos pos;

  Rational number;           // Number
  std::string name;          // Parameter / Operator
  std::size_t index = 0;     // Operator: basis index; Parameter: position
  long exponent = 0;         // Pow
  std::shared_ptr<const Expr> lhs, rhs;  // children (Pow/Negate use lhs)
};

using ExprPtr = std::shared_ptr<const Expr>;

struct ParameterDecl {
  std::string name;
  std::optional<Rational> default_value;
};

// Parsed model: canonical pairs, named parameters, Hamiltonian expression.
struct ModelDefinition {
  PhaseSpacePtr space;
  std::vector<ParameterDecl> parameters;
  ExprPtr hamiltonian;

  // Canonical re-rendering; parsing it again yields an equivalent model.
  std::string pretty() const;
};

using ParameterBinding = std::map<std::string, Rational>;

// Grammar (sections separated by newlines or ';', comments '#' to end of line):
//   pairs: q1/pq1, q2/pq2, ...
//   params: name[=rational], ...          (list may be empty)
//   H = <expression>                      (runs to end of input)
// Explicit '*' required, '^' takes an integer exponent and binds tighter than
// unary minus, denominators must be free of operators. All diagnostics carry
// 1-based line/column positions.
ModelDefinition parse_model(std::string_view text);

// Defaults overlaid with overrides; throws MissingParameterError for any
// parameter still unbound, StructuralError for overrides naming no parameter.
ParameterBinding complete_binding(const ModelDefinition& def, const ParameterBinding& overrides);

// Exact expansion of the Hamiltonian at the given binding. Scalar subtrees
// evaluate in rational arithmetic; operator products are normal-ordered.
// Throws MissingParameterError or DegenerateParameterError (zero denominator).
CanonicalPolynomial bind_and_expand(const ModelDefinition& def, const ParameterBinding& binding);

}  // namespace ptspec
