#include "ptspec/model.hpp"

#include <cctype>
#include <set>

#include "ptspec/errors.hpp"

namespace ptspec {

namespace {

enum class TokKind { Identifier, Number, Punct, Separator, End };

struct Token {
  TokKind kind;
  std::string text;      // identifier name, punct character, or number literal
  Rational value;        // Number only
  bool integral = false; // Number only: no '.' or exponent in the literal
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { tokenize(); }

  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](TokKind k, std::string t, SourcePos p) {
      tokens_.push_back({k, std::move(t), Rational(0), false, p});
    };
    while (i < text_.size()) {
      const char c = text_[i];
      const SourcePos pos{line, col};
      if (c == '\n') {
        push(TokKind::Separator, "\n", pos);
        ++i;
        ++line;
        col = 1;
      } else if (c == ';') {
        push(TokKind::Separator, ";", pos);
        ++i;
        ++col;
      } else if (c == '#') {
        while (i < text_.size() && text_[i] != '\n') {
          ++i;
          ++col;
        }
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        ++col;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && i + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        std::size_t start = i;
        bool integral = true;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
          ++i;
          ++col;
        }
        if (i < text_.size() && text_[i] == '.') {
          integral = false;
          ++i;
          ++col;
          while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
            ++i;
            ++col;
          }
        }
        if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
          if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
            integral = false;
            col += static_cast<int>(j - i);
            i = j;
            while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
              ++i;
              ++col;
            }
          }
        }
        std::string lit(text_.substr(start, i - start));
        Token t{TokKind::Number, lit, Rational(0), integral, pos};
        try {
          t.value = parse_rational(lit);
        } catch (const std::invalid_argument& e) {
          throw ParseError(pos.line, pos.column, e.what());
        }
        t.integral = integral && t.value.get_den() == 1;
        tokens_.push_back(std::move(t));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = i;
        while (i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                                    text_[i] == '_')) {
          ++i;
          ++col;
        }
        push(TokKind::Identifier, std::string(text_.substr(start, i - start)), pos);
      } else if (std::string_view(":=,/+-*^()").find(c) != std::string_view::npos) {
        push(TokKind::Punct, std::string(1, c), pos);
        ++i;
        ++col;
      } else {
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
    SourcePos end{line, col};
    tokens_.push_back({TokKind::End, "", Rational(0), false, end});
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text), toks_(lexer_.tokens()) {}

  ModelDefinition run() {
    skip_separators();
    parse_pairs_section();
    skip_separators();
    parse_params_section();
    skip_separators();
    parse_hamiltonian_header();
    ModelDefinition def;
    def.space = PhaseSpace::make(coords_, momenta_);
    def.parameters = params_;
    build_name_tables(def);
    ExprPtr h = parse_expression(0);
    if (peek().kind != TokKind::End)
      throw ParseError(peek().pos.line, peek().pos.column,
                       "unexpected trailing input '" + peek().text + "'");
    resolve(h, def);
    validate_denominators(h, false);
    def.hamiltonian = std::move(h);
    return def;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() { return toks_[pos_++]; }
  bool at_punct(char c) const { return peek().kind == TokKind::Punct && peek().text[0] == c; }

  void skip_separators() {
    while (peek().kind == TokKind::Separator) ++pos_;
  }
  void skip_expr_separators() {
    // inside the H expression line breaks are plain whitespace
    while (peek().kind == TokKind::Separator) ++pos_;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.pos.line, t.pos.column, msg);
  }

  std::string expect_identifier(const std::string& what) {
    if (peek().kind != TokKind::Identifier) fail(peek(), "expected " + what);
    return advance().text;
  }
  void expect_punct(char c, const std::string& what) {
    if (!at_punct(c)) fail(peek(), "expected '" + std::string(1, c) + "' " + what);
    ++pos_;
  }

  void parse_pairs_section() {
    const Token& kw = peek();
    if (kw.kind != TokKind::Identifier || kw.text != "pairs")
      fail(kw, "expected 'pairs:' section");
    ++pos_;
    expect_punct(':', "after 'pairs'");
    while (true) {
      std::string q = expect_identifier("coordinate name");
      expect_punct('/', "between coordinate and momentum");
      std::string p = expect_identifier("momentum name");
      coords_.push_back(std::move(q));
      momenta_.push_back(std::move(p));
      if (at_punct(',')) {
        ++pos_;
        continue;
      }
      break;
    }
    if (peek().kind != TokKind::Separator && peek().kind != TokKind::End)
      fail(peek(), "expected end of 'pairs' line");
  }

  void parse_params_section() {
    const Token& kw = peek();
    if (kw.kind != TokKind::Identifier || kw.text != "params")
      fail(kw, "expected 'params:' section");
    ++pos_;
    expect_punct(':', "after 'params'");
    if (peek().kind == TokKind::Separator || peek().kind == TokKind::End) return;  // empty list
    while (true) {
      const Token& nameTok = peek();
      std::string name = expect_identifier("parameter name");
      if (name == "i") fail(nameTok, "'i' is reserved for the imaginary unit");
      ParameterDecl decl{std::move(name), std::nullopt};
      if (at_punct('=')) {
        ++pos_;
        decl.default_value = parse_signed_rational();
      }
      params_.push_back(std::move(decl));
      if (at_punct(',')) {
        ++pos_;
        continue;
      }
      break;
    }
    if (peek().kind != TokKind::Separator && peek().kind != TokKind::End)
      fail(peek(), "expected end of 'params' line");
  }

  Rational parse_signed_rational() {
    bool negative = false;
    if (at_punct('-')) {
      negative = true;
      ++pos_;
    } else if (at_punct('+')) {
      ++pos_;
    }
    if (peek().kind != TokKind::Number) fail(peek(), "expected a rational literal");
    Rational v = advance().value;
    if (at_punct('/')) {
      ++pos_;
      if (peek().kind != TokKind::Number) fail(peek(), "expected denominator digits");
      const Token& den = advance();
      if (den.value == 0) fail(den, "zero denominator in rational literal");
      v /= den.value;
    }
    return negative ? Rational(-v) : v;
  }

  void parse_hamiltonian_header() {
    const Token& kw = peek();
    if (kw.kind != TokKind::Identifier || kw.text != "H")
      fail(kw, "expected 'H =' section");
    ++pos_;
    expect_punct('=', "after 'H'");
  }

  void build_name_tables(const ModelDefinition& def) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < def.space->dim(); ++i) seen.insert(def.space->name(i));
    if (seen.count("i"))
      throw ParseError(1, 1, "'i' is reserved for the imaginary unit and cannot name an operator");
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (!seen.insert(params_[i].name).second)
        throw ParseError(1, 1, "identifier '" + params_[i].name +
                                   "' is declared more than once (parameter shadows an operator "
                                   "or another parameter)");
      param_index_[params_[i].name] = i;
    }
    space_ = def.space;
  }

  // precedence climbing; '+'/'-' bind at 1, '*'/'/' at 2, '^' handled in postfix
  ExprPtr parse_expression(int min_prec) {
    skip_expr_separators();
    ExprPtr lhs = parse_unary();
    while (true) {
      skip_expr_separators();
      if (peek().kind != TokKind::Punct) break;
      const char op = peek().text[0];
      int prec;
      if (op == '+' || op == '-')
        prec = 1;
      else if (op == '*' || op == '/')
        prec = 2;
      else
        break;
      if (prec < min_prec) break;
      const SourcePos pos = peek().pos;
      ++pos_;
      ExprPtr rhs = parse_expression(prec + 1);
      auto node = std::make_shared<Expr>();
      node->kind = op == '+'   ? Expr::Kind::Add
                   : op == '-' ? Expr::Kind::Sub
                   : op == '*' ? Expr::Kind::Mul
                               : Expr::Kind::Div;
      node->pos = pos;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    skip_expr_separators();
    if (at_punct('-')) {
      const SourcePos pos = peek().pos;
      ++pos_;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Negate;
      node->pos = pos;
      node->lhs = parse_unary();  // '^' binds tighter: -x^2 == -(x^2)
      return node;
    }
    if (at_punct('+')) {
      ++pos_;
      return parse_unary();
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr base = parse_atom();
    while (true) {
      skip_expr_separators();
      if (!at_punct('^')) break;
      const SourcePos pos = peek().pos;
      ++pos_;
      long e = parse_exponent();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Pow;
      node->pos = pos;
      node->exponent = e;
      node->lhs = std::move(base);
      base = std::move(node);
    }
    return base;
  }

  long parse_exponent() {
    skip_expr_separators();
    bool negative = false;
    bool parenthesized = false;
    if (at_punct('(')) {
      parenthesized = true;
      ++pos_;
      skip_expr_separators();
      if (at_punct('-')) {
        negative = true;
        ++pos_;
        skip_expr_separators();
      }
    }
    if (peek().kind != TokKind::Number || !peek().integral)
      fail(peek(), "exponent must be an integer literal");
    const Token& t = advance();
    if (t.value.get_num() > 64 || t.value.get_num() < 0) fail(t, "exponent out of range [0, 64]");
    long e = static_cast<long>(t.value.get_num().get_si());
    if (parenthesized) {
      skip_expr_separators();
      expect_punct(')', "closing the exponent");
    }
    return negative ? -e : e;
  }

  ExprPtr parse_atom() {
    skip_expr_separators();
    const Token& t = peek();
    if (t.kind == TokKind::Number) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Number;
      node->pos = t.pos;
      node->number = t.value;
      ++pos_;
      return node;
    }
    if (t.kind == TokKind::Identifier) {
      auto node = std::make_shared<Expr>();
      node->pos = t.pos;
      node->name = t.text;
      node->kind = Expr::Kind::Parameter;  // provisional; resolve() fixes the kind
      ++pos_;
      return node;
    }
    if (at_punct('(')) {
      const SourcePos open = t.pos;
      ++pos_;
      ExprPtr inner = parse_expression(0);
      skip_expr_separators();
      if (!at_punct(')'))
        throw ParseError(open.line, open.column, "unbalanced parenthesis (opened here)");
      ++pos_;
      return inner;
    }
    if (t.kind == TokKind::End) fail(t, "unexpected end of input in expression");
    fail(t, "unexpected token '" + t.text + "' in expression");
  }

  void resolve(const ExprPtr& e, const ModelDefinition& def) {
    Expr& node = const_cast<Expr&>(*e);
    switch (node.kind) {
      case Expr::Kind::Parameter: {
        if (node.name == "i") {
          node.kind = Expr::Kind::Imaginary;
          return;
        }
        if (auto idx = def.space->index_of(node.name)) {
          node.kind = Expr::Kind::Operator;
          node.index = *idx;
          return;
        }
        auto it = param_index_.find(node.name);
        if (it == param_index_.end())
          throw ParseError(node.pos.line, node.pos.column,
                           "unknown identifier '" + node.name + "'");
        node.index = it->second;
        return;
      }
      case Expr::Kind::Negate:
      case Expr::Kind::Pow:
        resolve(node.lhs, def);
        return;
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul:
      case Expr::Kind::Div:
        resolve(node.lhs, def);
        resolve(node.rhs, def);
        return;
      default:
        return;
    }
  }

  static bool contains_operator(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Operator: return true;
      case Expr::Kind::Negate:
      case Expr::Kind::Pow: return contains_operator(e->lhs);
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul:
      case Expr::Kind::Div:
        return contains_operator(e->lhs) || contains_operator(e->rhs);
      default: return false;
    }
  }

  // operators may not appear under a denominator or a negative exponent
  void validate_denominators(const ExprPtr& e, bool scalar_context) {
    if (scalar_context && e->kind == Expr::Kind::Operator)
      throw ParseError(e->pos.line, e->pos.column,
                       "operator '" + e->name + "' inside a denominator");
    switch (e->kind) {
      case Expr::Kind::Negate:
        validate_denominators(e->lhs, scalar_context);
        return;
      case Expr::Kind::Pow:
        validate_denominators(e->lhs, scalar_context || e->exponent < 0);
        return;
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul:
        validate_denominators(e->lhs, scalar_context);
        validate_denominators(e->rhs, scalar_context);
        return;
      case Expr::Kind::Div:
        validate_denominators(e->lhs, scalar_context);
        validate_denominators(e->rhs, true);
        return;
      default:
        return;
    }
  }

  Lexer lexer_;
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> coords_, momenta_;
  std::vector<ParameterDecl> params_;
  std::map<std::string, std::size_t> param_index_;
  PhaseSpacePtr space_;
};

std::string pretty_expr(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Number: return to_string(e->number);
    case Expr::Kind::Imaginary: return "i";
    case Expr::Kind::Parameter:
    case Expr::Kind::Operator: return e->name;
    case Expr::Kind::Negate: return "(-" + pretty_expr(e->lhs) + ")";
    case Expr::Kind::Pow: {
      std::string exp = std::to_string(e->exponent);
      if (e->exponent < 0) exp = "(" + exp + ")";
      return "(" + pretty_expr(e->lhs) + ")^" + exp;
    }
    case Expr::Kind::Add: return "(" + pretty_expr(e->lhs) + " + " + pretty_expr(e->rhs) + ")";
    case Expr::Kind::Sub: return "(" + pretty_expr(e->lhs) + " - " + pretty_expr(e->rhs) + ")";
    case Expr::Kind::Mul: return "(" + pretty_expr(e->lhs) + "*" + pretty_expr(e->rhs) + ")";
    default: return "(" + pretty_expr(e->lhs) + "/" + pretty_expr(e->rhs) + ")";
  }
}

class Expander {
 public:
  Expander(const ModelDefinition& def, const ParameterBinding& binding)
      : def_(def), binding_(binding) {}

  CanonicalPolynomial expand(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Number:
        return CanonicalPolynomial::scalar(def_.space, GaussianRational(e->number));
      case Expr::Kind::Imaginary:
        return CanonicalPolynomial::scalar(def_.space, GaussianRational::i());
      case Expr::Kind::Parameter: {
        auto it = binding_.find(e->name);
        if (it == binding_.end()) throw MissingParameterError(e->name);
        return CanonicalPolynomial::scalar(def_.space, GaussianRational(it->second));
      }
      case Expr::Kind::Operator:
        return CanonicalPolynomial::basis_op(def_.space, e->index);
      case Expr::Kind::Negate: {
        CanonicalPolynomial v = expand(e->lhs);
        v *= GaussianRational(-1);
        return v;
      }
      case Expr::Kind::Add: return expand(e->lhs) + expand(e->rhs);
      case Expr::Kind::Sub: return expand(e->lhs) - expand(e->rhs);
      case Expr::Kind::Mul: return multiply(expand(e->lhs), expand(e->rhs));
      case Expr::Kind::Div: {
        CanonicalPolynomial num = expand(e->lhs);
        GaussianRational den = scalar_value(e->rhs);
        if (den.is_zero())
          throw DegenerateParameterError("denominator '" + pretty_expr(e->rhs) +
                                         "' evaluates to zero");
        num *= GaussianRational(1) / den;
        return num;
      }
      case Expr::Kind::Pow: {
        if (e->exponent < 0) {
          GaussianRational base = scalar_value(e->lhs);
          if (base.is_zero())
            throw DegenerateParameterError("base '" + pretty_expr(e->lhs) +
                                           "' of a negative power evaluates to zero");
          GaussianRational inv = GaussianRational(1) / base;
          GaussianRational acc(1);
          for (long i = 0; i < -e->exponent; ++i) acc *= inv;
          return CanonicalPolynomial::scalar(def_.space, acc);
        }
        CanonicalPolynomial acc = CanonicalPolynomial::scalar(def_.space, GaussianRational(1));
        CanonicalPolynomial base = expand(e->lhs);
        for (long i = 0; i < e->exponent; ++i) acc = multiply(acc, base);
        return acc;
      }
      default:
        throw StructuralError("corrupt expression node");
    }
  }

 private:
  // denominators are operator-free by construction, so they expand to scalars
  GaussianRational scalar_value(const ExprPtr& e) {
    CanonicalPolynomial p = expand(e);
    return p.scalar_part();
  }

  const ModelDefinition& def_;
  const ParameterBinding& binding_;
};

}  // namespace

std::string ModelDefinition::pretty() const {
  std::string out = "pairs: ";
  const std::size_t n = space->pairs();
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += space->name(i) + "/" + space->name(n + i);
  }
  out += "\nparams: ";
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (i) out += ", ";
    out += parameters[i].name;
    if (parameters[i].default_value) out += "=" + to_string(*parameters[i].default_value);
  }
  out += "\nH = " + pretty_expr(hamiltonian) + "\n";
  return out;
}

ModelDefinition parse_model(std::string_view text) { return Parser(text).run(); }

ParameterBinding complete_binding(const ModelDefinition& def, const ParameterBinding& overrides) {
  for (const auto& [name, value] : overrides) {
    bool known = false;
    for (const auto& p : def.parameters) known |= p.name == name;
    if (!known) throw StructuralError("'" + name + "' is not a parameter of this model");
  }
  ParameterBinding binding;
  for (const auto& p : def.parameters) {
    auto it = overrides.find(p.name);
    if (it != overrides.end())
      binding[p.name] = it->second;
    else if (p.default_value)
      binding[p.name] = *p.default_value;
    else
      throw MissingParameterError(p.name);
  }
  return binding;
}

CanonicalPolynomial bind_and_expand(const ModelDefinition& def, const ParameterBinding& binding) {
  for (const auto& p : def.parameters)
    if (!binding.count(p.name)) throw MissingParameterError(p.name);
  return Expander(def, binding).expand(def.hamiltonian);
}

}  // namespace ptspec
