#include "sigma/frontend.hpp"

#include <array>
#include <cctype>
#include <mutex>
#include <unordered_map>

#include "sigma/annihilation.hpp"
#include "sigma/chains.hpp"
#include "sigma/fusion.hpp"

namespace sigma::lang {

namespace {
std::string at(const std::string& what, std::size_t pos) {
    return what + " (at position " + std::to_string(pos) + ")";
}
}   // namespace

SyntaxError::SyntaxError(const std::string& what, std::size_t p) : Error(at(what, p)), pos(p) {}
ArityError::ArityError(const std::string& what, std::size_t p) : Error(at(what, p)), pos(p) {}
EvalError::EvalError(const std::string& what, std::size_t p) : Error(at(what, p)), pos(p) {}

namespace {

struct BuiltinInfo {
    std::string_view name;
    Builtin op;
    std::size_t arity;
};

constexpr BuiltinInfo kBuiltins[] = {
    {"pf", Builtin::PairFusion, 2},
    {"anti", Builtin::Antielement, 1},
    {"astar", Builtin::Antiset, 1},
    {"succ", Builtin::Successor, 1},
    {"min", Builtin::EpsMin, 1},
    {"max", Builtin::EpsMax, 1},
    {"td", Builtin::TotallyDifferent, 2},
    {"ahat", Builtin::AntiIntersection, 2},
    {"sdiff", Builtin::StarDifference, 2},
    {"pow", Builtin::Powerset, 1},
    {"gen", Builtin::GeneratedSpace, 2},
    {"isp", Builtin::IntegerSpace, 1},
    {"card", Builtin::Cardinality, 1},
    {"leq", Builtin::OrderLeq, 3},
};

const BuiltinInfo* find_builtin(std::string_view name) {
    for (const auto& b : kBuiltins)
        if (b.name == name) return &b;
    return nullptr;
}

struct Parser {
    std::string_view src;
    std::size_t i = 0;

    void skip_ws() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < src.size() ? src[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < src.size() && src[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "'", i);
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        while (true) {
            skip_ws();
            const std::size_t pos = i;
            if (!accept('+')) break;
            Expr node;
            node.kind = Expr::Kind::Fuse;
            node.pos = pos;
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_term());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr parse_term() {
        skip_ws();
        const std::size_t pos = i;
        if (i >= src.size()) throw SyntaxError("unexpected end of input", pos);
        const char c = src[i];
        if (c == '(') {
            ++i;
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '{') return parse_set_display();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_numeral();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_word();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }

    Expr parse_set_display() {
        const std::size_t pos = i;
        expect('{');
        Expr node;
        node.kind = Expr::Kind::SetDisplay;
        node.pos = pos;
        if (accept('}')) return node;
        node.children.push_back(parse_expr());
        while (accept(',')) node.children.push_back(parse_expr());
        expect('}');
        return node;
    }

    Expr parse_numeral() {
        const std::size_t pos = i;
        std::size_t value = 0;
        std::size_t digits = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            value = value * 10 + std::size_t(src[i] - '0');
            ++digits;
            ++i;
            if (digits > 9) throw SyntaxError("numeral too large", pos);
        }
        // Suffixes bind tightly, no whitespace in between.
        Family fam = Family::Naturals;
        bool suffixed = false;
        if (i < src.size() && src[i] == '*') {
            fam = Family::Antinaturals;
            suffixed = true;
            ++i;
        } else if (i < src.size() && src[i] == '_') {
            if (i + 1 >= src.size())
                throw SyntaxError("missing family suffix after '_'", i);
            switch (src[i + 1]) {
                case 'T': fam = Family::Theta; break;
                case 'L': fam = Family::Lambda; break;
                case 'O': fam = Family::Omega; break;
                case 'G': fam = Family::Gamma; break;
                case 'P': fam = Family::Pi; break;
                default:
                    throw SyntaxError("unknown family suffix", i + 1);
            }
            suffixed = true;
            i += 2;
        }
        if (value == 0) {
            if (suffixed) throw SyntaxError("family index must be positive", pos);
            Expr node;
            node.kind = Expr::Kind::Literal;
            node.pos = pos;
            node.literal = SigmaSet::empty();
            return node;
        }
        Expr node;
        node.kind = Expr::Kind::FamilyRef;
        node.pos = pos;
        node.family = fam;
        node.index = value;
        return node;
    }

    Expr parse_word() {
        const std::size_t pos = i;
        std::size_t j = i;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
            ++j;
        const std::string_view word = src.substr(i, j - i);
        i = j;
        if (word == "a" || word == "b") {
            Expr node;
            node.kind = Expr::Kind::Literal;
            node.pos = pos;
            node.literal = word == "a" ? alpha() : beta();
            return node;
        }
        if (const BuiltinInfo* b = find_builtin(word)) {
            expect('(');
            Expr node;
            node.kind = Expr::Kind::Apply;
            node.pos = pos;
            node.op = b->op;
            node.children.push_back(parse_expr());
            while (accept(',')) node.children.push_back(parse_expr());
            expect(')');
            if (node.children.size() != b->arity)
                throw ArityError(std::string(b->name) + " expects " +
                                     std::to_string(b->arity) + " argument(s), got " +
                                     std::to_string(node.children.size()),
                                 pos);
            return node;
        }
        if (std::isupper(static_cast<unsigned char>(word[0]))) {
            Expr node;
            node.kind = Expr::Kind::Var;
            node.pos = pos;
            node.name = std::string(word);
            return node;
        }
        throw SyntaxError("unknown name '" + std::string(word) + "'", pos);
    }
};

}   // namespace

Expr parse(std::string_view text) {
    Parser p{text};
    Expr e = p.parse_expr();
    p.skip_ws();
    if (p.i < text.size()) throw SyntaxError("trailing input", p.i);
    return e;
}

namespace {

SigmaSet as_set(const Value& v, std::size_t pos) {
    if (const SigmaSet* s = std::get_if<SigmaSet>(&v)) return *s;
    throw EvalError("expected a set-valued operand", pos);
}

Value eval_node(const Expr& e, const Env& env);

Value apply(const Expr& e, const Env& env) {
    auto arg = [&](std::size_t k) { return as_set(eval_node(e.children[k], env), e.children[k].pos); };
    switch (e.op) {
        case Builtin::PairFusion: return pair_fusion(arg(0), arg(1));
        case Builtin::Antielement: {
            const SigmaSet x = arg(0);
            auto m = antielement(x);
            if (!m) throw EvalError(to_text(x) + " has no antielement", e.pos);
            return *m;
        }
        case Builtin::Antiset: {
            const SigmaSet x = arg(0);
            auto m = antiset(x);
            if (!m) throw EvalError(to_text(x) + " has no antiset", e.pos);
            return *m;
        }
        case Builtin::Successor: return successor(arg(0));
        case Builtin::EpsMin: return eps_min(arg(0));
        case Builtin::EpsMax: return eps_max(arg(0));
        case Builtin::TotallyDifferent: return totally_different(arg(0), arg(1));
        case Builtin::AntiIntersection: return anti_intersection(arg(0), arg(1));
        case Builtin::StarDifference: return star_difference(arg(0), arg(1));
        case Builtin::Powerset: return powerset(arg(0));
        case Builtin::GeneratedSpace: return generated_space(arg(0), arg(1));
        case Builtin::IntegerSpace: return integer_space(arg(0));
        case Builtin::Cardinality: return std::uint64_t(arg(0).cardinality());
        case Builtin::OrderLeq: return order_leq(arg(0), arg(1), arg(2));
    }
    throw EvalError("unknown function", e.pos);
}

Value eval_node(const Expr& e, const Env& env) {
    try {
        switch (e.kind) {
            case Expr::Kind::Literal:
                return e.literal;
            case Expr::Kind::FamilyRef:
                return family_element(e.family, e.index);
            case Expr::Kind::SetDisplay: {
                std::vector<SigmaSet> items;
                items.reserve(e.children.size());
                for (const auto& c : e.children)
                    items.push_back(as_set(eval_node(c, env), c.pos));
                return make_set(items);
            }
            case Expr::Kind::Fuse:
                return fuse(as_set(eval_node(e.children[0], env), e.children[0].pos),
                            as_set(eval_node(e.children[1], env), e.children[1].pos));
            case Expr::Kind::Apply:
                return apply(e, env);
            case Expr::Kind::Var: {
                auto it = env.find(e.name);
                if (it == env.end())
                    throw EvalError("unbound variable '" + e.name + "'", e.pos);
                return it->second;
            }
        }
        throw EvalError("malformed expression", e.pos);
    } catch (const SyntaxError&) {
        throw;
    } catch (const ArityError&) {
        throw;
    } catch (const EvalError&) {
        throw;
    } catch (const Error& err) {
        throw EvalError(err.what(), e.pos);
    }
}

}   // namespace

Value evaluate(const Expr& e, const Env& env) { return eval_node(e, env); }

Value evaluate(std::string_view text, const Env& env) {
    return eval_node(parse(text), env);
}

namespace {

std::string spell(Family f, std::size_t n) {
    switch (f) {
        case Family::Naturals:      return std::to_string(n);
        case Family::Antinaturals:  return std::to_string(n) + "*";
        case Family::Theta:         return std::to_string(n) + "_T";
        case Family::Lambda:        return std::to_string(n) + "_L";
        case Family::Omega:         return std::to_string(n) + "_O";
        case Family::Gamma:         return std::to_string(n) + "_G";
        case Family::Pi:            return std::to_string(n) + "_P";
    }
    return "?";
}

const std::unordered_map<const void*, std::string>& sugar_map() {
    static std::once_flag once;
    static std::unordered_map<const void*, std::string> map;
    std::call_once(once, [] {
        for (Family f : kAllFamilies)
            for (std::size_t n = 1; n <= kFamilyElementCap; ++n)
                map.emplace(family_element(f, n).id(), spell(f, n));
    });
    return map;
}

std::string sugared(const SigmaSet& v) {
    if (v.is_atom()) return v.atom_tag() == AtomTag::Alpha ? "a" : "b";
    const auto& map = sugar_map();
    if (auto it = map.find(v.id()); it != map.end()) return it->second;
    std::string out = "{";
    bool first = true;
    for (const auto& e : v.elements()) {
        if (!first) out += ",";
        first = false;
        out += sugared(e);
    }
    out += "}";
    return out;
}

std::string describe(const SpaceReport& r) {
    std::string out;
    switch (r.kind) {
        case SpaceCheckKind::Loop:        out = "check loop:"; break;
        case SpaceCheckKind::Order:       out = "check order:"; break;
        case SpaceCheckKind::Cardinality: out = "check cardinality:"; break;
    }
    if (r.kind == SpaceCheckKind::Cardinality) {
        out += " actual=" + std::to_string(r.actual) +
               " predicted=" + std::to_string(r.predicted) +
               " hypothesis=" + (r.in_hypothesis ? "yes" : "exploratory");
    } else {
        for (const auto& [name, ok] : r.details)
            out += " " + name + "=" + (ok ? "ok" : "FAIL");
    }
    out += r.passed ? " -> PASS" : " -> FAIL";
    for (const auto& w : r.witnesses) {
        if (w.label == "non_associative") {
            out += "\nnon-associative triple:";
        } else {
            out += "\ncounterexample (" + w.label + "):";
        }
        for (const auto& e : w.elems) out += " " + sugared(e);
    }
    return out;
}

}   // namespace

std::string format(const SigmaSet& v, Style style) {
    return style == Style::Canonical ? to_text(v) : sugared(v);
}

std::string format(const Value& v, Style style) {
    if (const SigmaSet* s = std::get_if<SigmaSet>(&v)) return format(*s, style);
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const std::uint64_t* n = std::get_if<std::uint64_t>(&v)) return std::to_string(*n);
    return describe(std::get<SpaceReport>(v));
}

}   // namespace sigma::lang
