#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Expression trees shared by program predicates, loop bodies, synthesis
// specifications and synthesized hypotheses.
//
// Integer sorted nodes: Var, Const, Add, Sub, Ite, Mod, App.
// Boolean sorted nodes: Le, Ge, Lt, Gt, Eq, And, Or, Not, True, False.
// Booleans evaluate to 0/1. Arithmetic is exact (no clamping).

namespace alf::expr {

enum class Op : std::uint8_t {
  Var,
  Const,
  Add,
  Sub,
  Ite,
  Mod,
  App,
  Le,
  Ge,
  Lt,
  Gt,
  Eq,
  And,
  Or,
  Not,
  True,
  False,
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  /// Variable index for Var, literal for Const, modulus for Mod.
  std::int64_t value = 0;
  std::vector<Expr> kids;
};

inline constexpr std::size_t kMaxArity = 8;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Expr var(std::size_t index);
Expr constant(std::int64_t c);
Expr plus(Expr a, Expr b);
Expr minus(Expr a, Expr b);
Expr ite(Expr cond, Expr then_e, Expr else_e);
Expr mod(Expr a, std::int64_t k);
Expr apply(std::vector<Expr> args);
Expr leq(Expr a, Expr b);
Expr geq(Expr a, Expr b);
Expr lt(Expr a, Expr b);
Expr gt(Expr a, Expr b);
Expr eq(Expr a, Expr b);
Expr conj(std::vector<Expr> parts);
Expr disj(std::vector<Expr> parts);
Expr negate(Expr a);
Expr truth(bool b);

bool is_bool(const Node& n);

/// Evaluates `n` with variables bound to `vars`. App nodes evaluate `fn`
/// (which must be non-null when the tree contains an application) with its
/// variables bound to the evaluated arguments.
std::int64_t eval(const Node& n, std::span<const std::int64_t> vars,
                  const Node* fn = nullptr);

inline bool holds(const Node& n, std::span<const std::int64_t> vars,
                  const Node* fn = nullptr) {
  return eval(n, vars, fn) != 0;
}

/// Node count, conditions included.
std::size_t size(const Node& n);

/// Structural equality.
bool equal(const Node& a, const Node& b);

/// Strict structural order: size first, then a fixed preorder comparison.
bool structural_less(const Node& a, const Node& b);

/// One past the largest variable index used, 0 for closed trees.
std::size_t var_bound(const Node& n);

/// Arity of every App node, or -1 if there is none; throws ParseError when
/// two applications disagree.
int app_arity(const Node& n);

/// Replaces Var(i) by replacement[i].
Expr substitute(const Expr& e, std::span<const Expr> replacement);

std::string print(const Node& n, std::span<const std::string> names,
                  std::string_view fname = "f");

struct ParseOptions {
  /// Name of the unknown function; empty disables applications.
  std::string fname;
};

/// Parses an s-expression. Recognized heads: + - ite mod <= >= < > = and or
/// not, plus the unknown-function name when enabled. `(- a)` is 0 - a.
Expr parse(std::string_view text, std::span<const std::string> names,
           const ParseOptions& opts = {});

}  // namespace alf::expr
