#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sigma/families.hpp"
#include "sigma/set.hpp"
#include "sigma/spaces.hpp"

namespace sigma::lang {

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos);
    std::size_t pos;
};

struct ArityError : Error {
    ArityError(const std::string& what, std::size_t pos);
    std::size_t pos;
};

struct EvalError : Error {
    EvalError(const std::string& what, std::size_t pos);
    std::size_t pos;
};

// Expression functions. `+` is annihilating fusion, never plain union; pair
// fusion is always the explicit function pf.
enum class Builtin {
    PairFusion,        // pf(x,y)
    Antielement,       // anti(x)
    Antiset,           // astar(x)
    Successor,         // succ(x)
    EpsMin,            // min(x)
    EpsMax,            // max(x)
    TotallyDifferent,  // td(x,y)
    AntiIntersection,  // ahat(x,y)
    StarDifference,    // sdiff(x,y)
    Powerset,          // pow(x)
    GeneratedSpace,    // gen(x,y)
    IntegerSpace,      // isp(x)
    Cardinality,       // card(x)
    OrderLeq,          // leq(a,b,x)
};

struct Expr {
    enum class Kind { Literal, FamilyRef, SetDisplay, Apply, Fuse, Var };

    Kind kind = Kind::Literal;
    std::size_t pos = 0;

    SigmaSet literal;             // Literal: {}, alpha or beta
    Family family{};              // FamilyRef
    std::size_t index = 0;        // FamilyRef
    Builtin op{};                 // Apply
    std::string name;             // Var
    std::vector<Expr> children;   // SetDisplay items, Apply args, Fuse lhs/rhs
};

// Grammar: literals `{}`/`0` (empty), `a`, `b`; numerals `3`, `3*`, `3_T`,
// `3_L`, `3_O`, `3_G`, `3_P` for the seven families; set display {e,...};
// left-associative infix `+` (fuse); the Builtin functions; parentheses;
// uppercase identifiers as REPL variables. Arity is checked at parse time.
Expr parse(std::string_view text);

using Value = std::variant<SigmaSet, bool, std::uint64_t, SpaceReport>;
using Env = std::map<std::string, Value, std::less<>>;

Value evaluate(const Expr& e, const Env& env = {});

// Convenience: parse then evaluate.
Value evaluate(std::string_view text, const Env& env = {});

enum class Style { Canonical, Sugared };

// Canonical prints raw braces/atoms; Sugared substitutes recognized family
// elements ("2*" for {b,{b}}). parse(format(v)) evaluates back to v in both
// styles.
std::string format(const SigmaSet& v, Style style);
std::string format(const Value& v, Style style);

}   // namespace sigma::lang
