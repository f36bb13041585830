#include "alf/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace alf::expr {

namespace {

Expr make(Op op, std::vector<Expr> kids, std::int64_t value = 0) {
  return std::make_shared<const Node>(Node{op, value, std::move(kids)});
}

void require_sort(const Expr& e, bool want_bool, const char* where) {
  if (!e) throw ParseError(std::string(where) + ": missing operand");
  if (is_bool(*e) != want_bool) {
    throw ParseError(std::string(where) + ": expected " +
                     (want_bool ? "boolean" : "integer") + " operand");
  }
}

}  // namespace

Expr var(std::size_t index) {
  return make(Op::Var, {}, static_cast<std::int64_t>(index));
}
Expr constant(std::int64_t c) { return make(Op::Const, {}, c); }

Expr plus(Expr a, Expr b) {
  require_sort(a, false, "+");
  require_sort(b, false, "+");
  return make(Op::Add, {std::move(a), std::move(b)});
}

Expr minus(Expr a, Expr b) {
  require_sort(a, false, "-");
  require_sort(b, false, "-");
  return make(Op::Sub, {std::move(a), std::move(b)});
}

Expr ite(Expr cond, Expr then_e, Expr else_e) {
  require_sort(cond, true, "ite");
  require_sort(then_e, false, "ite");
  require_sort(else_e, false, "ite");
  return make(Op::Ite, {std::move(cond), std::move(then_e), std::move(else_e)});
}

Expr mod(Expr a, std::int64_t k) {
  require_sort(a, false, "mod");
  if (k <= 0) throw ParseError("mod: modulus must be a positive constant");
  return make(Op::Mod, {std::move(a)}, k);
}

Expr apply(std::vector<Expr> args) {
  if (args.empty() || args.size() > kMaxArity) {
    throw ParseError("application arity must be in [1, 8]");
  }
  for (const auto& a : args) require_sort(a, false, "application");
  return make(Op::App, std::move(args));
}

#define ALF_CMP(fn, opcode, label)        \
  Expr fn(Expr a, Expr b) {               \
    require_sort(a, false, label);        \
    require_sort(b, false, label);        \
    return make(opcode, {std::move(a), std::move(b)}); \
  }
ALF_CMP(leq, Op::Le, "<=")
ALF_CMP(geq, Op::Ge, ">=")
ALF_CMP(lt, Op::Lt, "<")
ALF_CMP(gt, Op::Gt, ">")
ALF_CMP(eq, Op::Eq, "=")
#undef ALF_CMP

Expr conj(std::vector<Expr> parts) {
  if (parts.empty()) return truth(true);
  for (const auto& p : parts) require_sort(p, true, "and");
  if (parts.size() == 1) return parts.front();
  return make(Op::And, std::move(parts));
}

Expr disj(std::vector<Expr> parts) {
  if (parts.empty()) return truth(false);
  for (const auto& p : parts) require_sort(p, true, "or");
  if (parts.size() == 1) return parts.front();
  return make(Op::Or, std::move(parts));
}

Expr negate(Expr a) {
  require_sort(a, true, "not");
  return make(Op::Not, {std::move(a)});
}

Expr truth(bool b) { return make(b ? Op::True : Op::False, {}); }

bool is_bool(const Node& n) {
  switch (n.op) {
    case Op::Le:
    case Op::Ge:
    case Op::Lt:
    case Op::Gt:
    case Op::Eq:
    case Op::And:
    case Op::Or:
    case Op::Not:
    case Op::True:
    case Op::False:
      return true;
    default:
      return false;
  }
}

std::int64_t eval(const Node& n, std::span<const std::int64_t> vars,
                  const Node* fn) {
  switch (n.op) {
    case Op::Var:
      return vars[static_cast<std::size_t>(n.value)];
    case Op::Const:
      return n.value;
    case Op::Add:
      return eval(*n.kids[0], vars, fn) + eval(*n.kids[1], vars, fn);
    case Op::Sub:
      return eval(*n.kids[0], vars, fn) - eval(*n.kids[1], vars, fn);
    case Op::Ite:
      return eval(*n.kids[0], vars, fn) != 0 ? eval(*n.kids[1], vars, fn)
                                             : eval(*n.kids[2], vars, fn);
    case Op::Mod: {
      const std::int64_t r = eval(*n.kids[0], vars, fn) % n.value;
      return r < 0 ? r + n.value : r;
    }
    case Op::App: {
      std::array<std::int64_t, kMaxArity> args{};
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        args[i] = eval(*n.kids[i], vars, fn);
      }
      return eval(*fn, std::span<const std::int64_t>(args.data(), n.kids.size()),
                  nullptr);
    }
    case Op::Le:
      return eval(*n.kids[0], vars, fn) <= eval(*n.kids[1], vars, fn);
    case Op::Ge:
      return eval(*n.kids[0], vars, fn) >= eval(*n.kids[1], vars, fn);
    case Op::Lt:
      return eval(*n.kids[0], vars, fn) < eval(*n.kids[1], vars, fn);
    case Op::Gt:
      return eval(*n.kids[0], vars, fn) > eval(*n.kids[1], vars, fn);
    case Op::Eq:
      return eval(*n.kids[0], vars, fn) == eval(*n.kids[1], vars, fn);
    case Op::And:
      for (const auto& k : n.kids) {
        if (eval(*k, vars, fn) == 0) return 0;
      }
      return 1;
    case Op::Or:
      for (const auto& k : n.kids) {
        if (eval(*k, vars, fn) != 0) return 1;
      }
      return 0;
    case Op::Not:
      return eval(*n.kids[0], vars, fn) == 0;
    case Op::True:
      return 1;
    case Op::False:
      return 0;
  }
  return 0;
}

std::size_t size(const Node& n) {
  std::size_t s = 1;
  for (const auto& k : n.kids) s += size(*k);
  return s;
}

bool equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.op != b.op || a.value != b.value || a.kids.size() != b.kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!equal(*a.kids[i], *b.kids[i])) return false;
  }
  return true;
}

namespace {

int preorder_cmp(const Node& a, const Node& b) {
  if (a.op != b.op) return a.op < b.op ? -1 : 1;
  if (a.value != b.value) return a.value < b.value ? -1 : 1;
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (int c = preorder_cmp(*a.kids[i], *b.kids[i]); c != 0) return c;
  }
  return 0;
}

}  // namespace

bool structural_less(const Node& a, const Node& b) {
  const std::size_t sa = size(a), sb = size(b);
  if (sa != sb) return sa < sb;
  return preorder_cmp(a, b) < 0;
}

std::size_t var_bound(const Node& n) {
  std::size_t bound = n.op == Op::Var ? static_cast<std::size_t>(n.value) + 1 : 0;
  // Variables under an application belong to the caller, so they count too.
  for (const auto& k : n.kids) bound = std::max(bound, var_bound(*k));
  return bound;
}

int app_arity(const Node& n) {
  int arity = n.op == Op::App ? static_cast<int>(n.kids.size()) : -1;
  for (const auto& k : n.kids) {
    const int sub = app_arity(*k);
    if (sub < 0) continue;
    if (arity >= 0 && arity != sub) {
      throw ParseError("applications of the unknown function disagree on arity");
    }
    arity = sub;
  }
  return arity;
}

Expr substitute(const Expr& e, std::span<const Expr> replacement) {
  if (e->op == Op::Var) return replacement[static_cast<std::size_t>(e->value)];
  if (e->kids.empty()) return e;
  std::vector<Expr> kids;
  kids.reserve(e->kids.size());
  for (const auto& k : e->kids) kids.push_back(substitute(k, replacement));
  return make(e->op, std::move(kids), e->value);
}

namespace {

const char* head_of(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Ite: return "ite";
    case Op::Mod: return "mod";
    case Op::Le: return "<=";
    case Op::Ge: return ">=";
    case Op::Lt: return "<";
    case Op::Gt: return ">";
    case Op::Eq: return "=";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Not: return "not";
    default: return "";
  }
}

void print_to(std::ostream& os, const Node& n, std::span<const std::string> names,
              std::string_view fname) {
  switch (n.op) {
    case Op::Var: {
      const auto i = static_cast<std::size_t>(n.value);
      if (i < names.size()) {
        os << names[i];
      } else {
        os << '$' << i;
      }
      return;
    }
    case Op::Const:
      os << n.value;
      return;
    case Op::True:
      os << "true";
      return;
    case Op::False:
      os << "false";
      return;
    case Op::App:
      os << '(' << fname;
      break;
    default:
      os << '(' << head_of(n.op);
      break;
  }
  for (const auto& k : n.kids) {
    os << ' ';
    print_to(os, *k, names, fname);
  }
  if (n.op == Op::Mod) os << ' ' << n.value;
  os << ')';
}

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names,
         const ParseOptions& opts)
      : text_(text), names_(names), opts_(opts) {}

  Expr parse_all() {
    Expr e = parse_one();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view atom() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an atom");
    return text_.substr(start, pos_ - start);
  }

  static bool integer(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  }

  Expr parse_one() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') return leaf(atom());
    ++pos_;
    const std::string_view head = atom();
    std::vector<Expr> args;
    // mod takes its modulus as a bare literal in the last position.
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated list");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(parse_one());
    }
    try {
      return build(head, std::move(args));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  Expr leaf(std::string_view tok) {
    std::int64_t v = 0;
    if (integer(tok, v)) return constant(v);
    if (tok == "true") return truth(true);
    if (tok == "false") return truth(false);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == tok) return var(i);
    }
    fail("unknown symbol '" + std::string(tok) + "'");
  }

  static void arity(std::string_view head, const std::vector<Expr>& args,
                    std::size_t want) {
    if (args.size() != want) {
      throw ParseError("'" + std::string(head) + "' expects " +
                       std::to_string(want) + " operands, got " +
                       std::to_string(args.size()));
    }
  }

  Expr build(std::string_view head, std::vector<Expr> args) {
    if (!opts_.fname.empty() && head == opts_.fname) return apply(std::move(args));
    if (head == "+") {
      arity(head, args, 2);
      return plus(args[0], args[1]);
    }
    if (head == "-") {
      if (args.size() == 1) return minus(constant(0), args[0]);
      arity(head, args, 2);
      return minus(args[0], args[1]);
    }
    if (head == "ite") {
      arity(head, args, 3);
      return ite(args[0], args[1], args[2]);
    }
    if (head == "mod") {
      arity(head, args, 2);
      if (args[1]->op != Op::Const) throw ParseError("mod: modulus must be a literal");
      return mod(args[0], args[1]->value);
    }
    if (head == "<=") { arity(head, args, 2); return leq(args[0], args[1]); }
    if (head == ">=") { arity(head, args, 2); return geq(args[0], args[1]); }
    if (head == "<") { arity(head, args, 2); return lt(args[0], args[1]); }
    if (head == ">") { arity(head, args, 2); return gt(args[0], args[1]); }
    if (head == "=") { arity(head, args, 2); return eq(args[0], args[1]); }
    if (head == "and") {
      if (args.empty()) throw ParseError("'and' needs operands");
      return conj(std::move(args));
    }
    if (head == "or") {
      if (args.empty()) throw ParseError("'or' needs operands");
      return disj(std::move(args));
    }
    if (head == "not") {
      arity(head, args, 1);
      return negate(args[0]);
    }
    throw ParseError("unknown operator '" + std::string(head) + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print(const Node& n, std::span<const std::string> names,
                  std::string_view fname) {
  std::ostringstream os;
  print_to(os, n, names, fname);
  return os.str();
}

Expr parse(std::string_view text, std::span<const std::string> names,
           const ParseOptions& opts) {
  return Parser(text, names, opts).parse_all();
}

}  // namespace alf::expr
