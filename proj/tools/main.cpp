#include <cctype>
#include <cstdint>
#include <iostream>
#include <string>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigma/families.hpp"
#include "sigma/frontend.hpp"
#include "sigma/spaces.hpp"

namespace {

using nlohmann::ordered_json;
using sigma::SigmaSet;
using sigma::SpaceReport;
using Value = sigma::lang::Value;
using Style = sigma::lang::Style;

ordered_json value_json(const SigmaSet& v) {
    return ordered_json::parse(sigma::to_json(v));
}

ordered_json report_json(const SpaceReport& r) {
    ordered_json j;
    switch (r.kind) {
        case sigma::SpaceCheckKind::Loop: j["kind"] = "loop"; break;
        case sigma::SpaceCheckKind::Order: j["kind"] = "order"; break;
        case sigma::SpaceCheckKind::Cardinality: j["kind"] = "cardinality"; break;
    }
    j["passed"] = r.passed;
    ordered_json det = ordered_json::object();
    for (const auto& [k, v] : r.details) det[k] = v;
    j["details"] = det;
    if (r.kind == sigma::SpaceCheckKind::Cardinality) {
        j["actual"] = r.actual;
        j["predicted"] = r.predicted;
        j["in_hypothesis"] = r.in_hypothesis;
    }
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) {
        ordered_json jw;
        jw["label"] = w.label;
        ordered_json elems = ordered_json::array();
        for (const auto& e : w.elems) elems.push_back(value_json(e));
        jw["elements"] = elems;
        ws.push_back(jw);
    }
    j["witnesses"] = ws;
    return j;
}

ordered_json any_json(const Value& v) {
    ordered_json j;
    if (const SigmaSet* s = std::get_if<SigmaSet>(&v)) {
        j["type"] = "set";
        j["value"] = value_json(*s);
    } else if (const bool* b = std::get_if<bool>(&v)) {
        j["type"] = "bool";
        j["value"] = *b;
    } else if (const std::uint64_t* n = std::get_if<std::uint64_t>(&v)) {
        j["type"] = "count";
        j["value"] = *n;
    } else {
        j["type"] = "report";
        j["value"] = report_json(std::get<SpaceReport>(v));
    }
    return j;
}

struct Options {
    bool json = false;
    Style style = Style::Sugared;
};

SigmaSet eval_set(const std::string& text) {
    Value v = sigma::lang::evaluate(text);
    if (const SigmaSet* s = std::get_if<SigmaSet>(&v)) return *s;
    throw sigma::Error("expression must denote a set: " + text);
}

int emit_value(const Value& v, const Options& opt) {
    if (opt.json)
        std::cout << any_json(v).dump() << "\n";
    else
        std::cout << sigma::lang::format(v, opt.style) << "\n";
    return 0;
}

int emit_report(const SpaceReport& r, const Options& opt) {
    if (opt.json)
        std::cout << report_json(r).dump() << "\n";
    else
        std::cout << sigma::lang::format(Value(r), opt.style) << "\n";
    return r.passed ? 0 : 1;
}

int run_repl(const Options& opt) {
    sigma::lang::Env env;
    std::string line;
    while (true) {
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t");
        std::string trimmed = line.substr(begin, end - begin + 1);
        if (trimmed == ":q" || trimmed == ":quit") break;
        try {
            if (trimmed.rfind("let ", 0) == 0) {
                std::size_t eq = trimmed.find('=');
                if (eq == std::string::npos)
                    throw sigma::Error("let needs the form: let NAME = <expr>");
                std::string name = trimmed.substr(4, eq - 4);
                name.erase(0, name.find_first_not_of(" \t"));
                name.erase(name.find_last_not_of(" \t") + 1);
                if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
                    throw sigma::Error("binding names start with an uppercase letter");
                Value v = sigma::lang::evaluate(trimmed.substr(eq + 1), env);
                env.insert_or_assign(name, v);
                emit_value(v, opt);
            } else {
                emit_value(sigma::lang::evaluate(trimmed, env), opt);
            }
        } catch (const sigma::Error& err) {
            std::cout << "error: " << err.what() << "\n";
        }
    }
    return 0;
}

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for finite sigma-sets, antielements and annihilating fusion"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output = "text";
    app.add_option("--output", output, "output mode")
        ->check(CLI::IsMember({"text", "json"}));
    bool canonical = false;
    app.add_flag("--canonical", canonical, "print values without family sugar");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
    std::string eval_expr;
    cmd_eval->add_option("expr", eval_expr, "expression")->required();

    auto* cmd_repl = app.add_subcommand("repl", "interactive session with let-bindings");

    auto* cmd_check = app.add_subcommand("check", "run a conjecture check");
    cmd_check->require_subcommand(1);
    auto* chk_card = cmd_check->add_subcommand("cardinality", "generated-space size law");
    std::string card_x, card_y;
    chk_card->add_option("--x", card_x, "first base set")->required();
    chk_card->add_option("--y", card_y, "second base set")->required();
    auto* chk_loop = cmd_check->add_subcommand("loop", "loop axioms of fuse over 3^x");
    std::string loop_x;
    chk_loop->add_option("--x", loop_x, "base set")->required();
    auto* chk_order = cmd_check->add_subcommand("order", "partial order axioms over 3^x");
    std::string order_x;
    chk_order->add_option("--x", order_x, "base set")->required();

    auto* cmd_family = app.add_subcommand("family", "inductive family elements");
    std::string fam_name;
    std::size_t fam_n = 1;
    bool fam_prefix = false;
    cmd_family->add_option("--name", fam_name, "IN, IN*, THETA, LAMBDA, OMEGA, GAMMA or PI")
        ->required();
    cmd_family->add_option("--n", fam_n, "element index (1-based)")->required();
    cmd_family->add_flag("--prefix", fam_prefix, "print {element(1),...,element(n)}");

    auto* cmd_export = app.add_subcommand("export", "export a structure");
    cmd_export->require_subcommand(1);
    auto* exp_hasse = cmd_export->add_subcommand("hasse", "covering relation of <= on 3^x");
    std::string hasse_x, hasse_format = "dot";
    exp_hasse->add_option("--x", hasse_x, "base set")->required();
    exp_hasse->add_option("--format", hasse_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    auto* exp_cayley = cmd_export->add_subcommand("cayley", "CSV fuse table over 3^x");
    std::string cayley_x;
    exp_cayley->add_option("--x", cayley_x, "base set")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Options opt;
    opt.json = output == "json";
    opt.style = canonical ? Style::Canonical : Style::Sugared;

    try {
        if (cmd_eval->parsed())
            return emit_value(sigma::lang::evaluate(eval_expr), opt);
        if (cmd_repl->parsed())
            return run_repl(opt);
        if (chk_card->parsed())
            return emit_report(
                sigma::check_cardinality_conjecture(eval_set(card_x), eval_set(card_y)), opt);
        if (chk_loop->parsed())
            return emit_report(sigma::check_loop_axioms(sigma::integer_space(eval_set(loop_x))),
                               opt);
        if (chk_order->parsed())
            return emit_report(sigma::check_partial_order(eval_set(order_x)), opt);
        if (cmd_family->parsed()) {
            auto fam = sigma::family_from_name(fam_name);
            if (!fam) throw sigma::Error("unknown family '" + fam_name + "'");
            const SigmaSet v = fam_prefix ? sigma::family_prefix(*fam, fam_n)
                                          : sigma::family_element(*fam, fam_n);
            return emit_value(Value(v), opt);
        }
        if (exp_hasse->parsed()) {
            const SigmaSet x = eval_set(hasse_x);
            if (hasse_format == "dot") {
                std::cout << sigma::hasse_dot(x);
            } else {
                const SigmaSet space = sigma::integer_space(x);
                std::unordered_map<const void*, std::size_t> idx;
                ordered_json nodes = ordered_json::array();
                ordered_json labels = ordered_json::array();
                for (std::size_t i = 0; i < space.elements().size(); ++i) {
                    idx[space.elements()[i].id()] = i;
                    nodes.push_back(value_json(space.elements()[i]));
                    labels.push_back(sigma::lang::format(space.elements()[i], Style::Sugared));
                }
                ordered_json edges = ordered_json::array();
                for (const auto& [lo, hi] : sigma::hasse_edges(x))
                    edges.push_back({idx.at(lo.id()), idx.at(hi.id())});
                ordered_json j;
                j["nodes"] = nodes;
                j["labels"] = labels;
                j["edges"] = edges;
                std::cout << j.dump() << "\n";
            }
            return 0;
        }
        if (exp_cayley->parsed()) {
            std::cout << sigma::cayley_csv(sigma::integer_space(eval_set(cayley_x)));
            return 0;
        }
    } catch (const sigma::Error& err) {
        if (opt.json)
            std::cout << ordered_json{{"error", err.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
