#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "sigma/chains.hpp"

namespace oracles {

using sigma::Chain;
using sigma::enumerate_chains;

namespace {

struct Less {
    bool operator()(const SigmaSet& a, const SigmaSet& b) const { return a < b; }
};

std::size_t chain_cap(const SigmaSet& x) { return x.depth() + 1; }

bool atom_hereditary(const SigmaSet& x, sigma::AtomTag tag) {
    if (x.is_atom()) return x.atom_tag() == tag;
    for (const auto& e : x.elements())
        if (atom_hereditary(e, tag)) return true;
    return false;
}

}   // namespace

std::uint64_t count_chains(const SigmaSet& x, std::size_t max_len) {
    // g(e, len) = chains with greatest link e and at most len links.
    std::unordered_map<const void*, std::vector<std::uint64_t>> memo;
    auto g = [&](auto&& self, const SigmaSet& e, std::size_t len) -> std::uint64_t {
        if (len == 0) return 0;
        auto& row = memo[e.id()];
        if (row.size() <= len) row.resize(len + 1, std::uint64_t(-1));
        if (row[len] != std::uint64_t(-1)) return row[len];
        std::uint64_t total = 1;
        for (const auto& m : e.elements()) total += self(self, m, len - 1);
        row[len] = total;
        return total;
    };
    std::uint64_t total = 0;
    for (const auto& e : x.elements()) total += g(g, e, max_len);
    return total;
}

std::vector<SigmaSet> chain_link_values(const SigmaSet& x) {
    std::set<SigmaSet, Less> links;
    for (const Chain& c : enumerate_chains(x, chain_cap(x)))
        for (const auto& l : c.links) links.insert(l);
    return {links.begin(), links.end()};
}

bool chains_totally_different(const SigmaSet& x, const SigmaSet& y) {
    const auto lx = chain_link_values(x);
    const auto ly = chain_link_values(y);
    for (const auto& v : lx)
        if (std::binary_search(ly.begin(), ly.end(), v, Less{})) return false;
    for (sigma::AtomTag t : {sigma::AtomTag::Alpha, sigma::AtomTag::Beta})
        if (atom_hereditary(x, t) && atom_hereditary(y, t)) return false;
    return true;
}

SigmaSet chains_eps_min(const SigmaSet& x) {
    if (x.is_atom()) return x;
    std::vector<SigmaSet> keep;
    for (const auto& y : x.elements()) {
        bool minimal = true;
        for (const Chain& c : enumerate_chains(y, chain_cap(y))) {
            for (const auto& l : c.links)
                if (x.contains(l)) { minimal = false; break; }
            if (!minimal) break;
        }
        if (minimal) keep.push_back(y);
    }
    return sigma::make_set(keep);
}

SigmaSet chains_eps_max(const SigmaSet& x) {
    if (x.is_atom()) return x;
    std::vector<SigmaSet> keep;
    for (const auto& y : x.elements()) {
        bool maximal = true;
        for (const auto& z : x.elements()) {
            for (const Chain& c : enumerate_chains(z, chain_cap(z))) {
                for (const auto& l : c.links)
                    if (l == y) { maximal = false; break; }
                if (!maximal) break;
            }
            if (!maximal) break;
        }
        if (maximal) keep.push_back(y);
    }
    return sigma::make_set(keep);
}

std::uint64_t count_universe(std::size_t max_depth, std::size_t max_breadth) {
    std::set<SigmaSet, Less> all = {SigmaSet::empty(), sigma::alpha(), sigma::beta()};
    for (std::size_t d = 1; d <= max_depth; ++d) {
        const std::vector<SigmaSet> prev(all.begin(), all.end());
        std::vector<SigmaSet> combo;
        auto walk = [&](auto&& self, std::size_t start) -> void {
            if (!combo.empty()) {
                try {
                    all.insert(sigma::make_set(combo));
                } catch (const sigma::ExclusionViolation&) {
                }
            }
            if (combo.size() == max_breadth) return;
            for (std::size_t i = start; i < prev.size(); ++i) {
                combo.push_back(prev[i]);
                self(self, i + 1);
                combo.pop_back();
            }
        };
        walk(walk, 0);
    }
    return all.size();
}

LiteralOracle::LiteralOracle(std::vector<SigmaSet> universe)
    : universe_(std::move(universe)) {
    for (std::size_t i = 0; i < universe_.size(); ++i)
        index_[universe_[i].id()] = i;
    for (const auto& v : universe_) table_[v.id()] = {};

    constexpr std::size_t kMaxRounds = 64;
    for (std::size_t round = 0; round < kMaxRounds; ++round) {
        Table next;
        for (const auto& z : universe_) {
            std::vector<std::size_t> found;
            for (std::size_t w = 0; w < universe_.size(); ++w)
                if (b_under(table_, z, universe_[w])) found.push_back(w);
            next[z.id()] = std::move(found);
        }
        const bool changed = next != table_;
        table_ = std::move(next);
        if (!changed) {
            stable_ = true;
            break;
        }
    }
}

const SigmaSet& LiteralOracle::oracle_min(const SigmaSet& v) const {
    auto it = min_memo_.find(v.id());
    if (it != min_memo_.end()) return it->second;
    return min_memo_.emplace(v.id(), chains_eps_min(v)).first->second;
}

bool LiteralOracle::psi(const Table& t, const SigmaSet& z, const SigmaSet& other) const {
    auto it = t.find(z.id());
    if (it == t.end() || it->second.size() != 1) return false;
    return other.contains(universe_[it->second[0]]);
}

bool LiteralOracle::oracle_td(const SigmaSet& x, const SigmaSet& y) const {
    return chains_totally_different(x, y);
}

bool LiteralOracle::b_under(const Table& t, const SigmaSet& x, const SigmaSet& y) const {
    const SigmaSet& mx = oracle_min(x);
    const SigmaSet& my = oracle_min(y);
    const bool cond_a = (mx == sigma::one() && my == sigma::one_star()) ||
                        (mx == sigma::one_star() && my == sigma::one());
    if (!cond_a) return false;
    if (x.is_empty() || y.is_empty() || !oracle_td(x, y)) return false;
    for (const auto& z : x.elements())
        if (!mx.contains(z) && !psi(t, z, y)) return false;
    for (const auto& z : y.elements())
        if (!my.contains(z) && !psi(t, z, x)) return false;
    return true;
}

bool LiteralOracle::b_holds(const SigmaSet& x, const SigmaSet& y) const {
    return b_under(table_, x, y);
}

std::vector<SigmaSet> LiteralOracle::annihilators(const SigmaSet& z) const {
    std::vector<SigmaSet> out;
    if (auto it = table_.find(z.id()); it != table_.end())
        for (std::size_t w : it->second) out.push_back(universe_[w]);
    return out;
}

LiteralOracle::AConditions LiteralOracle::a_conditions(const SigmaSet& x,
                                                       const SigmaSet& y) const {
    AConditions r;
    const SigmaSet& mx = oracle_min(x);
    const SigmaSet& my = oracle_min(y);
    r.a = (mx != sigma::one() || my != sigma::one_star()) &&
          (mx != sigma::one_star() || my != sigma::one());
    r.b = x.is_empty() || y.is_empty() || !oracle_td(x, y);
    for (const auto& w : x.elements())
        if (!mx.contains(w) && !psi(table_, w, y)) { r.c = true; break; }
    for (const auto& w : y.elements())
        if (!my.contains(w) && !psi(table_, w, x)) { r.d = true; break; }
    return r;
}

}   // namespace oracles
