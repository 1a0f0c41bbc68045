#pragma once

// The factorization scripting language. A script is a sequence of
// semicolon-terminated statements; names must be declared before use.
// The full grammar is in README.md.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcgspin/serialize.hpp"

namespace mcgspin::script {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct FormItem {
  std::string selector;  // "*", "x*", "y*", "a*", "b*" or a basis label
  int value = 0;
  friend bool operator==(const FormItem&, const FormItem&) = default;
};

struct WordLetter {
  std::string curve;
  int exponent = 1;  // nonzero; |exponent| > 1 repeats the letter
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

// ---- declarations ----

struct Basis {
  int genus = 1;
  LabelScheme scheme = LabelScheme::XY;
  friend bool operator==(const Basis&, const Basis&) = default;
};

struct Form {
  std::string name;
  std::vector<FormItem> items;
  friend bool operator==(const Form&, const Form&) = default;
};

struct SparseCurve {
  std::vector<std::string> terms;  // empty means the zero class
  std::optional<std::vector<std::int64_t>> integral;
  friend bool operator==(const SparseCurve&, const SparseCurve&) = default;
};
struct VectorCurve {
  std::vector<std::int64_t> integral;
  friend bool operator==(const VectorCurve&, const VectorCurve&) = default;
};
struct AppliedCurve {
  std::string word;
  std::string curve;
  friend bool operator==(const AppliedCurve&, const AppliedCurve&) = default;
};
struct ChainCurve {
  int index = 1;
  friend bool operator==(const ChainCurve&, const ChainCurve&) = default;
};

struct CurveDecl {
  std::string name;
  std::variant<SparseCurve, VectorCurve, AppliedCurve, ChainCurve> expr;
  friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct WordDecl {
  std::string name;
  std::vector<WordLetter> letters;  // empty is the identity
  std::optional<std::string> builtin;  // "phi" or "psi"
  friend bool operator==(const WordDecl&, const WordDecl&) = default;
};

enum class Direction { Left, Right };

struct TwistList {
  std::vector<WordLetter> twists;  // positive exponents
  int power = 0;
  friend bool operator==(const TwistList&, const TwistList&) = default;
};
struct ConjugateOp {
  std::string fact, word;
  friend bool operator==(const ConjugateOp&, const ConjugateOp&) = default;
};
struct FiberSumOp {
  std::string first, second;
  std::optional<std::string> word;
  friend bool operator==(const FiberSumOp&, const FiberSumOp&) = default;
};
struct HurwitzOp {
  std::string fact;
  std::int64_t index = 1;
  Direction direction = Direction::Right;
  friend bool operator==(const HurwitzOp&, const HurwitzOp&) = default;
};
struct BreedOp {
  std::string fact;
  std::int64_t index = 1;
  std::string subsurface;
  friend bool operator==(const BreedOp&, const BreedOp&) = default;
};
struct BuiltinFact {
  std::string which;  // P, U, V, VU, Z
  std::optional<int> k;
  friend bool operator==(const BuiltinFact&, const BuiltinFact&) = default;
};

struct FactDecl {
  std::string name;
  std::variant<TwistList, ConjugateOp, FiberSumOp, HurwitzOp, BreedOp, BuiltinFact> expr;
  friend bool operator==(const FactDecl&, const FactDecl&) = default;
};

struct SubsurfaceDecl {
  std::string name;
  std::optional<std::vector<std::string>> curves;  // 4 boundary then 8 interior; nullopt = builtin
  friend bool operator==(const SubsurfaceDecl&, const SubsurfaceDecl&) = default;
};

// ---- queries ----

struct CheckQuery {
  std::string form, curve;
  friend bool operator==(const CheckQuery&, const CheckQuery&) = default;
};
struct CheckSpinQuery {
  std::string fact, form;
  friend bool operator==(const CheckSpinQuery&, const CheckSpinQuery&) = default;
};
struct CheckRelationQuery {
  std::string fact;
  friend bool operator==(const CheckRelationQuery&, const CheckRelationQuery&) = default;
};
struct InvariantsQuery {
  std::string fact;
  std::optional<std::string> signature;  // meyer, endo, paper
  friend bool operator==(const InvariantsQuery&, const InvariantsQuery&) = default;
};
struct H1Query {
  std::string fact;
  friend bool operator==(const H1Query&, const H1Query&) = default;
};
struct ArfQuery {
  std::string form;
  friend bool operator==(const ArfQuery&, const ArfQuery&) = default;
};

using Node = std::variant<Basis, Form, CurveDecl, WordDecl, FactDecl, SubsurfaceDecl, CheckQuery, CheckSpinQuery,
                          CheckRelationQuery, InvariantsQuery, H1Query, ArfQuery>;

struct Statement {
  Position position;
  Node node;
  bool is_query() const { return node.index() >= 6; }
  /// Source positions are not part of a statement's identity.
  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Parses and scope-checks in one pass. Throws ParseError (kind Parse for
/// syntax, NotFound for undeclared names, DimensionMismatch for coordinates
/// and vector lengths outside the declared basis).
Script parse_script(std::string_view text);

std::string to_text(const Statement& s);
/// One statement per line; parse_script(to_text(s)) == s.
std::string to_text(const Script& s);

struct RunResult {
  std::vector<Json> certificates;  // one per query, in statement order
  bool all_verdicts_pass = true;
};

/// Executes the script. Failures inside a statement surface as ParseError
/// carrying that statement's position; lookup and shape failures are
/// reported as Precondition, other library kinds pass through.
RunResult run(const Script& s);

}  // namespace mcgspin::script
