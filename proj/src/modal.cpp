#include "antitop/modal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "antitop/core.hpp"
#include "antitop/error.hpp"
#include "antitop/search.hpp"

namespace antitop::modal {

// ---------------------------------------------------------------------------
// Formula

Formula Formula::make(Op op, std::string name, const Formula* lhs, const Formula* rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  if (lhs) node->lhs = lhs->node_;
  if (rhs) node->rhs = rhs->node_;
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) { return make(Op::kVar, std::move(name), nullptr, nullptr); }
Formula Formula::negation(Formula operand) { return make(Op::kNot, {}, &operand, nullptr); }
Formula Formula::conjunction(Formula lhs, Formula rhs) { return make(Op::kAnd, {}, &lhs, &rhs); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return make(Op::kOr, {}, &lhs, &rhs); }
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Op::kImplies, {}, &lhs, &rhs);
}
Formula Formula::box(Formula operand) { return make(Op::kBox, {}, &operand, nullptr); }
Formula Formula::diamond(Formula operand) {
  return negation(box(negation(std::move(operand))));
}

namespace {

bool is_unary(Op op) { return op == Op::kNot || op == Op::kBox; }

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::kVar) {
    out.insert(f.name());
    return;
  }
  collect_variables(f.lhs(), out);
  if (!is_unary(f.op())) collect_variables(f.rhs(), out);
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  collect_variables(*this, names);
  return {names.begin(), names.end()};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Op::kVar) return a.name() == b.name();
  if (!(a.lhs() == b.lhs())) return false;
  return is_unary(a.op()) || a.rhs() == b.rhs();
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok { kVar, kNot, kBox, kDiamond, kAnd, kOr, kImplies, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t position;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kVar: return "variable '" + t.text + "'";
    case Tok::kEnd: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = i;
      while (i < text.size() &&
             ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= '0' && text[i] <= '9') ||
              text[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::kVar, std::string(text.substr(start, i - start)), start});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "[]") {
      out.push_back({Tok::kBox, "[]", i});
      i += 2;
    } else if (two == "<>") {
      out.push_back({Tok::kDiamond, "<>", i});
      i += 2;
    } else if (two == "->") {
      out.push_back({Tok::kImplies, "->", i});
      i += 2;
    } else if (c == '!') {
      out.push_back({Tok::kNot, "!", i++});
    } else if (c == '&') {
      out.push_back({Tok::kAnd, "&", i++});
    } else if (c == '|') {
      out.push_back({Tok::kOr, "|", i++});
    } else if (c == '(') {
      out.push_back({Tok::kLParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", i++});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = formula();
    if (peek().kind == Tok::kRParen) throw ParseError("unbalanced ')'", peek().position);
    expect(Tok::kEnd, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + ", found " + describe(peek()),
                       peek().position);
    }
    ++pos_;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::kImplies) {
      advance();
      return Formula::implication(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::kOr) {
      advance();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::kAnd) {
      advance();
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot:
        advance();
        return Formula::negation(unary());
      case Tok::kBox:
        advance();
        return Formula::box(unary());
      case Tok::kDiamond:
        advance();
        return Formula::diamond(unary());
      case Tok::kLParen: {
        const std::size_t open = t.position;
        advance();
        Formula inner = formula();
        if (peek().kind != Tok::kRParen) {
          if (peek().kind == Tok::kEnd) throw ParseError("unbalanced '('", open);
          throw ParseError("expected ')', found " + describe(peek()), peek().position);
        }
        advance();
        return inner;
      }
      case Tok::kVar:
        return Formula::var(advance().text);
      case Tok::kEnd:
        throw ParseError("dangling operator: expected operand, found end of input", t.position);
      default:
        throw ParseError("expected operand, found " + describe(t), t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength: -> 1, | 2, & 3, unary and atoms 4.
int precedence(Op op) {
  switch (op) {
    case Op::kImplies: return 1;
    case Op::kOr: return 2;
    case Op::kAnd: return 3;
    default: return 4;
  }
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::kVar:
      out += f.name();
      return;
    case Op::kNot:
    case Op::kBox:
      out += f.op() == Op::kNot ? "!" : "[]";
      print_child(f.lhs(), precedence(f.lhs().op()) < 4, out);
      return;
    default:
      break;
  }
  const int p = precedence(f.op());
  const bool right_assoc = f.op() == Op::kImplies;
  const int lp = precedence(f.lhs().op());
  const int rp = precedence(f.rhs().op());
  print_child(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += f.op() == Op::kAnd ? " & " : f.op() == Op::kOr ? " | " : " -> ";
  print_child(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(lex(text)).parse(); }

std::string to_string(const Formula& formula) {
  std::string out;
  print(formula, out);
  return out;
}

// ---------------------------------------------------------------------------
// Semantics

Model::Model(SetFamily family, Valuation valuation)
    : family_(std::move(family)), valuation_(std::move(valuation)) {
  if (auto report = is_anti_topology(family_); !report) {
    throw NotAntiTopology("model frame is not an anti-topology: " + to_string(*report.violation));
  }
  for (const auto& [name, set] : valuation_) family_.universe().check(set, "valuation of " + name);
}

SubsetMask truth_set(const Model& model, const Formula& formula) {
  const Universe& worlds = model.worlds();
  switch (formula.op()) {
    case Op::kVar: {
      auto it = model.valuation().find(formula.name());
      if (it == model.valuation().end()) {
        throw EvaluationError("variable '" + formula.name() + "' has no valuation");
      }
      return it->second;
    }
    case Op::kNot:
      return truth_set(model, formula.lhs()).complement();
    case Op::kAnd:
      return truth_set(model, formula.lhs()) & truth_set(model, formula.rhs());
    case Op::kOr:
      return truth_set(model, formula.lhs()) | truth_set(model, formula.rhs());
    case Op::kImplies:
      return truth_set(model, formula.lhs()).complement() | truth_set(model, formula.rhs());
    case Op::kBox:
      return model.family().contains(truth_set(model, formula.lhs())) ? worlds.full_set()
                                                                      : worlds.empty_set();
  }
  return worlds.empty_set();
}

bool is_valid_in_model(const Model& model, const Formula& formula) {
  return truth_set(model, formula).is_full();
}

namespace {

// Postfix program over raw bit vectors, used by the parallel sweep.
struct Instr {
  Op op;
  std::size_t var = 0;
};

void compile(const Formula& f, const std::vector<std::string>& vars, std::vector<Instr>& out) {
  if (f.op() == Op::kVar) {
    auto it = std::lower_bound(vars.begin(), vars.end(), f.name());
    out.push_back({Op::kVar, static_cast<std::size_t>(it - vars.begin())});
    return;
  }
  compile(f.lhs(), vars, out);
  if (!is_unary(f.op())) compile(f.rhs(), vars, out);
  out.push_back({f.op()});
}

std::uint64_t run(const std::vector<Instr>& program, const std::uint64_t* values,
                  const SetFamily& family, std::vector<std::uint64_t>& stack) {
  const std::size_t n = family.universe().size();
  const std::uint64_t full = SubsetMask::full_bits(n);
  stack.clear();
  for (const auto& ins : program) {
    if (ins.op == Op::kVar) {
      stack.push_back(values[ins.var]);
      continue;
    }
    const std::uint64_t a = stack.back();
    if (ins.op == Op::kNot) {
      stack.back() = ~a & full;
      continue;
    }
    if (ins.op == Op::kBox) {
      stack.back() = family.contains(SubsetMask(a, n)) ? full : 0;
      continue;
    }
    stack.pop_back();
    const std::uint64_t l = stack.back();
    switch (ins.op) {
      case Op::kAnd: stack.back() = l & a; break;
      case Op::kOr: stack.back() = l | a; break;
      default: stack.back() = (~l & full) | a; break;
    }
  }
  return stack.back();
}

struct Sweep {
  std::vector<std::string> vars;
  std::uint64_t total = 0;
};

Sweep prepare(const SetFamily& family, const Formula& formula) {
  if (auto report = is_anti_topology(family); !report) {
    throw NotAntiTopology("tautology check needs an anti-topology: " +
                          to_string(*report.violation));
  }
  Sweep s;
  s.vars = formula.variables();
  const std::size_t n = family.universe().size();
  const std::size_t bits = n * s.vars.size();
  if (bits > kMaxValuationBits) {
    throw CapacityError("valuation sweep over " + std::to_string(s.vars.size()) +
                        " variables on " + std::to_string(n) + " worlds exceeds " +
                        std::to_string(kMaxValuationBits) + " bits");
  }
  s.total = std::uint64_t{1} << bits;
  return s;
}

Valuation decode(const Sweep& s, std::size_t n, std::uint64_t index) {
  Valuation v;
  const std::uint64_t mask = SubsetMask::full_bits(n);
  for (std::size_t k = 0; k < s.vars.size(); ++k) {
    v.emplace(s.vars[k], SubsetMask((index >> (k * n)) & mask, n));
  }
  return v;
}

}  // namespace

TautologyReport is_tautology_in_space(const SetFamily& family, const Formula& formula) {
  const Sweep sweep = prepare(family, formula);
  const std::size_t n = family.universe().size();
  const std::uint64_t full = SubsetMask::full_bits(n);
  std::vector<Instr> program;
  compile(formula, sweep.vars, program);

  std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
  const auto total = static_cast<std::int64_t>(sweep.total);
#pragma omp parallel
  {
    std::vector<std::uint64_t> stack;
    std::vector<std::uint64_t> values(sweep.vars.size());
#pragma omp for reduction(min : first_failure) schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      for (std::size_t k = 0; k < values.size(); ++k) values[k] = (index >> (k * n)) & full;
      if (run(program, values.data(), family, stack) != full) {
        first_failure = std::min(first_failure, index);
      }
    }
  }

  if (first_failure == std::numeric_limits<std::uint64_t>::max()) return {true, std::nullopt};
  return {false, Model(family, decode(sweep, n, first_failure))};
}

TautologyReport is_tautology_in_space_serial(const SetFamily& family, const Formula& formula) {
  const Sweep sweep = prepare(family, formula);
  const std::size_t n = family.universe().size();
  for (std::uint64_t index = 0; index < sweep.total; ++index) {
    Model model(family, decode(sweep, n, index));
    if (!is_valid_in_model(model, formula)) return {false, std::move(model)};
  }
  return {true, std::nullopt};
}

TautologyReport is_anti_tautology_upto(std::size_t n_max, const Formula& formula,
                                       bool include_degenerate) {
  if (n_max < 2 || n_max > kMaxEnumerationPoints) {
    throw InvalidArgument("n_max must lie in [2, " + std::to_string(kMaxEnumerationPoints) +
                          "], got " + std::to_string(n_max));
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const auto& space : enumerate_anti_topologies(n, include_degenerate)) {
      auto report = is_tautology_in_space(space, formula);
      if (!report) return report;
    }
  }
  return {true, std::nullopt};
}

}  // namespace antitop::modal
