#include "sigma/set.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

#include "sigma/annihilation.hpp"

namespace sigma {

namespace detail {

struct Node {
    std::vector<SigmaSet> elems;   // canonical order; empty for atoms
    std::size_t structural_hash = 0;
    std::uint32_t depth = 0;
    bool is_atom = false;
    AtomTag tag = AtomTag::Alpha;
};

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_of(bool is_atom, AtomTag tag, std::span<const SigmaSet> elems) {
    if (is_atom) return tag == AtomTag::Alpha ? 0x5a5a5a5a1ULL : 0x5a5a5a5a2ULL;
    std::size_t h = hash_mix(0x517cc1b727220a95ULL, elems.size());
    for (const auto& e : elems)
        h = hash_mix(h, std::hash<const void*>{}(e.id()));
    return h;
}

// One logical interning map with atomic get-or-insert. Nodes are never freed;
// the deque keeps their addresses stable.
class Interner {
  public:
    static Interner& instance() {
        static Interner it;
        return it;
    }

    const Node* empty_node() { return empty_; }
    const Node* atom_node(AtomTag t) { return t == AtomTag::Alpha ? alpha_ : beta_; }

    const Node* set_node(std::vector<SigmaSet>&& elems) {
        std::size_t h = hash_of(false, AtomTag::Alpha, elems);
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, fresh] = buckets_.try_emplace(h);
        for (const Node* n : it->second)
            if (!n->is_atom && n->elems == elems) return n;
        std::uint32_t d = 0;
        for (const auto& e : elems)
            d = std::max(d, std::uint32_t(e.depth() + 1));
        Node& n = arena_.emplace_back();
        n.elems = std::move(elems);
        n.structural_hash = h;
        n.depth = d;
        it->second.push_back(&n);
        return &n;
    }

  private:
    Interner() {
        Node& e = arena_.emplace_back();
        e.structural_hash = hash_of(false, AtomTag::Alpha, {});
        empty_ = &e;
        buckets_[e.structural_hash].push_back(&e);
        Node& a = arena_.emplace_back();
        a.is_atom = true;
        a.tag = AtomTag::Alpha;
        a.structural_hash = hash_of(true, AtomTag::Alpha, {});
        alpha_ = &a;
        buckets_[a.structural_hash].push_back(&a);
        Node& b = arena_.emplace_back();
        b.is_atom = true;
        b.tag = AtomTag::Beta;
        b.structural_hash = hash_of(true, AtomTag::Beta, {});
        beta_ = &b;
        buckets_[b.structural_hash].push_back(&b);
    }

    std::mutex mu_;
    std::deque<Node> arena_;
    std::unordered_map<std::size_t, std::vector<const Node*>> buckets_;
    const Node* empty_ = nullptr;
    const Node* alpha_ = nullptr;
    const Node* beta_ = nullptr;
};

}   // namespace
}   // namespace detail

SigmaSet::SigmaSet() : node_(detail::Interner::instance().empty_node()) {}

SigmaSet SigmaSet::empty() { return SigmaSet(); }

SigmaSet SigmaSet::atom(AtomTag tag) {
    return SigmaSet(detail::Interner::instance().atom_node(tag));
}

bool SigmaSet::is_atom() const { return node_->is_atom; }

bool SigmaSet::is_empty() const { return !node_->is_atom && node_->elems.empty(); }

AtomTag SigmaSet::atom_tag() const {
    assert(is_atom());
    return node_->tag;
}

std::span<const SigmaSet> SigmaSet::elements() const {
    return node_->elems;
}

std::size_t SigmaSet::cardinality() const {
    return node_->is_atom ? 1 : node_->elems.size();
}

std::size_t SigmaSet::depth() const { return node_->depth; }

bool SigmaSet::contains(const SigmaSet& x) const {
    const auto& v = node_->elems;
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [](const SigmaSet& a, const SigmaSet& b) { return a < b; });
    return it != v.end() && *it == x;
}

bool SigmaSet::subset_of(const SigmaSet& y) const {
    if (*this == y) return true;
    if (is_atom()) return false;   // the atom's member is unrepresentable
    for (const auto& e : node_->elems)
        if (!y.contains(e)) return false;
    return true;
}

SigmaSet one() {
    static const SigmaSet v = make_set({alpha()});
    return v;
}

SigmaSet one_star() {
    static const SigmaSet v = make_set({beta()});
    return v;
}

std::strong_ordering compare(const SigmaSet& a, const SigmaSet& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const bool aa = a.is_atom(), ba = b.is_atom();
    if (aa != ba) return aa ? std::strong_ordering::less : std::strong_ordering::greater;
    if (aa) return a.node_->tag <=> b.node_->tag;
    const auto& x = a.node_->elems;
    const auto& y = b.node_->elems;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = compare(x[i], y[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return x.size() <=> y.size();
}

SigmaSet make_set(std::span<const SigmaSet> items) {
    std::vector<SigmaSet> v(items.begin(), items.end());
    std::sort(v.begin(), v.end(), [](const SigmaSet& a, const SigmaSet& b) { return a < b; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() >= 2) {
        for (const auto& e : v) {
            auto m = antielement(e);
            if (!m) continue;
            auto it = std::lower_bound(v.begin(), v.end(), *m,
                                       [](const SigmaSet& a, const SigmaSet& b) { return a < b; });
            if (it != v.end() && *it == *m)
                throw ExclusionViolation("make_set: " + to_text(e) + " and " + to_text(*m) +
                                         " annihilate and cannot share a set");
        }
    }
    return SigmaSet(detail::Interner::instance().set_node(std::move(v)));
}

SigmaSet make_set(std::initializer_list<SigmaSet> items) {
    return make_set(std::span<const SigmaSet>(items.begin(), items.size()));
}

SigmaSet intersect(const SigmaSet& x, const SigmaSet& y) {
    if (x.is_atom() || y.is_atom())
        return x == y ? x : SigmaSet::empty();
    std::vector<SigmaSet> out;
    for (const auto& e : x.elements())
        if (y.contains(e)) out.push_back(e);
    return make_set(out);
}

SigmaSet difference(const SigmaSet& x, const SigmaSet& y) {
    if (x.is_atom()) return x == y ? SigmaSet::empty() : x;
    std::vector<SigmaSet> out;
    for (const auto& e : x.elements())
        if (!y.contains(e)) out.push_back(e);
    return make_set(out);
}

namespace {

// C(n, k), saturating at cap+1.
std::size_t binom_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    unsigned long long c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const unsigned long long m = n - i;
        if (m != 0 && c > ~0ULL / m) return cap + 1;
        c = c * m / (i + 1);
        if (c > cap) return cap + 1;
    }
    return static_cast<std::size_t>(c);
}

// Binomial-sum projection of one enumeration level, saturating at cap+1.
std::size_t projected_level(std::size_t n, std::size_t breadth, std::size_t cap) {
    std::size_t total = 0;
    for (std::size_t k = 1; k <= breadth && k <= n; ++k) {
        total += binom_capped(n, k, cap);
        if (total > cap) return cap + 1;
    }
    return total;
}

}   // namespace

std::vector<SigmaSet> enumerate_universe(UniverseBounds bounds, std::size_t max_count) {
    std::vector<SigmaSet> level = {alpha(), beta(), SigmaSet::empty()};
    std::sort(level.begin(), level.end(),
              [](const SigmaSet& a, const SigmaSet& b) { return a < b; });

    std::size_t projected = level.size();
    for (std::size_t d = 1; d <= bounds.max_depth; ++d) {
        projected += projected_level(projected, bounds.max_breadth, max_count);
        if (projected > max_count)
            throw BoundsTooLarge("enumerate_universe: projected count exceeds cap of " +
                                 std::to_string(max_count));

        // Annihilating pairs among the previous levels; subsets containing one
        // would trip the exclusion guard.
        std::unordered_map<const void*, const void*> partners;
        for (const auto& v : level) {
            auto m = antielement(v);
            if (m) partners[v.id()] = m->id();
        }

        std::vector<SigmaSet> fresh;
        std::vector<SigmaSet> combo;
        const std::size_t prev_depth = d - 1;
        auto emit = [&](auto&& self, std::size_t start, bool has_new) -> void {
            if (!combo.empty() && has_new)
                fresh.push_back(make_set(combo));
            if (combo.size() == bounds.max_breadth) return;
            for (std::size_t i = start; i < level.size(); ++i) {
                const SigmaSet& cand = level[i];
                auto it = partners.find(cand.id());
                if (it != partners.end()) {
                    bool clash = false;
                    for (const auto& c : combo)
                        if (c.id() == it->second) { clash = true; break; }
                    if (clash) continue;
                }
                combo.push_back(cand);
                self(self, i + 1, has_new || cand.depth() == prev_depth);
                combo.pop_back();
            }
        };
        emit(emit, 0, false);

        level.insert(level.end(), fresh.begin(), fresh.end());
        std::sort(level.begin(), level.end(),
                  [](const SigmaSet& a, const SigmaSet& b) { return a < b; });
    }
    return level;
}

std::string to_text(const SigmaSet& v) {
    if (v.is_atom()) return v.atom_tag() == AtomTag::Alpha ? "a" : "b";
    std::string out = "{";
    bool first = true;
    for (const auto& e : v.elements()) {
        if (!first) out += ",";
        first = false;
        out += to_text(e);
    }
    out += "}";
    return out;
}

namespace {

void emit_json(const SigmaSet& v, std::string& out) {
    if (v.is_atom()) {
        out += v.atom_tag() == AtomTag::Alpha ? "{\"atom\":\"alpha\"}" : "{\"atom\":\"beta\"}";
        return;
    }
    out += "{\"set\":[";
    bool first = true;
    for (const auto& e : v.elements()) {
        if (!first) out += ',';
        first = false;
        emit_json(e, out);
    }
    out += "]}";
}

SigmaSet value_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("json value: expected an object");
    if (auto it = j.find("atom"); it != j.end()) {
        if (j.size() != 1 || !it->is_string()) throw Error("json value: malformed atom");
        const std::string& s = it->get_ref<const std::string&>();
        if (s == "alpha") return alpha();
        if (s == "beta") return beta();
        throw Error("json value: unknown atom tag '" + s + "'");
    }
    if (auto it = j.find("set"); it != j.end()) {
        if (j.size() != 1 || !it->is_array()) throw Error("json value: malformed set");
        std::vector<SigmaSet> elems;
        elems.reserve(it->size());
        for (const auto& e : *it) elems.push_back(value_from_json(e));
        return make_set(elems);
    }
    throw Error("json value: expected an \"atom\" or \"set\" key");
}

}   // namespace

std::string to_json(const SigmaSet& v) {
    std::string out;
    emit_json(v, out);
    return out;
}

SigmaSet from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("json value: parse failure");
    return value_from_json(j);
}

}   // namespace sigma
