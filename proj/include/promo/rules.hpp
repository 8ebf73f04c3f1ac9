#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "promo/domain.hpp"

namespace promo {

enum class FeatureType { kNumeric, kCategorical };

/// Declared feature space: name -> type. Rules may only reference declared
/// features; ordered comparisons are rejected on categorical ones.
using FeatureSchema = std::map<std::string, FeatureType>;

enum class CmpOp { kLt, kLe, kEq, kGe, kGt, kNe };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Constant {
  bool value;
};
struct Comparison {
  std::string feature;
  CmpOp op;
  FeatureValue literal;
};
struct Membership {
  std::string feature;
  std::vector<FeatureValue> values;
};
struct AndExpr {
  ExprPtr lhs, rhs;
};
struct OrExpr {
  ExprPtr lhs, rhs;
};
struct NotExpr {
  ExprPtr child;
};

struct Expr {
  std::variant<Constant, Comparison, Membership, AndExpr, OrExpr, NotExpr> node;
};

struct Rule {
  std::string item_id;
  ExprPtr expr;
};

struct RuleSet {
  std::vector<Rule> rules;
  FeatureSchema schema;
};

struct ParseError {
  int line = 0;
  std::string message;
};

struct ParseResult {
  RuleSet ruleset;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

/// Rule file grammar, one rule per line ('#' starts a comment):
///
///   item_id: expr
///   expr    := and ('OR' and)*
///   and     := unary ('AND' unary)*
///   unary   := 'NOT' unary | primary
///   primary := '(' expr ')' | 'TRUE' | 'FALSE'
///            | feature (<|<=|=|>=|>|!=) literal
///            | feature 'IN' '(' literal (',' literal)* ')'
///
/// Numeric features take number literals; categorical features take
/// double-quoted strings and only =, != and IN. Expression tree depth is
/// capped at 32. On any error the per-line messages carry line numbers and
/// the returned ruleset holds the rules that did parse.
ParseResult parse_rules(std::string_view text, FeatureSchema schema);

/// A predicate over a missing (or wrongly typed) feature evaluates false;
/// boolean connectives are exact two-valued logic on top of that.
bool eval(const Expr& expr, const UserProfile& profile);

/// Item ids whose rule evaluates true, in rule-file order.
std::vector<std::string> eligible_items(const UserProfile& profile, const RuleSet& rules);

/// Canonical text form; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& expr);

int tree_depth(const Expr& expr);

}  // namespace promo
