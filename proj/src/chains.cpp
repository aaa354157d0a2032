#include "sigma/chains.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "sigma/fusion.hpp"

namespace sigma {

namespace {

bool sorted_contains(const std::vector<SigmaSet>& v, const SigmaSet& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [](const SigmaSet& a, const SigmaSet& b) { return a < b; });
    return it != v.end() && *it == x;
}

bool sorted_intersects(std::span<const SigmaSet> a, std::span<const SigmaSet> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = compare(a[i], b[j]);
        if (c == std::strong_ordering::equal) return true;
        if (c < 0) ++i; else ++j;
    }
    return false;
}

void sort_dedup(std::vector<SigmaSet>& v) {
    std::sort(v.begin(), v.end(), [](const SigmaSet& a, const SigmaSet& b) { return a < b; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Linksets of shallow values are queried constantly (eps_min touches every
// element's links), so those are cached; deeper values recompute from their
// cached children rather than flooding the cache during universe sweeps.
constexpr std::size_t kLinkCacheDepth = 8;

LinkSet compute_links(const SigmaSet& x);

const LinkSet& cached_links(const SigmaSet& x) {
    static std::mutex mu;
    static std::unordered_map<const void*, LinkSet> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(x.id());
        if (it != cache.end()) return it->second;
    }
    LinkSet ls = compute_links(x);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace(x.id(), std::move(ls)).first->second;
}

// Borrows the cache for shallow values, owns a fresh linkset otherwise.
class LinksView {
  public:
    explicit LinksView(const SigmaSet& x) {
        if (x.depth() <= kLinkCacheDepth) {
            ptr_ = &cached_links(x);
        } else {
            owned_ = compute_links(x);
            ptr_ = &owned_;
        }
    }
    const LinkSet& operator*() const { return *ptr_; }
    const LinkSet* operator->() const { return ptr_; }

  private:
    LinkSet owned_;
    const LinkSet* ptr_ = nullptr;
};

LinkSet compute_links(const SigmaSet& x) {
    LinkSet out;
    if (x.is_atom()) {
        (x.atom_tag() == AtomTag::Alpha ? out.alpha_tail : out.beta_tail) = true;
        return out;
    }
    for (const auto& e : x.elements()) {
        out.values.push_back(e);
        LinksView le(e);
        out.values.insert(out.values.end(), le->values.begin(), le->values.end());
        out.alpha_tail = out.alpha_tail || le->alpha_tail;
        out.beta_tail = out.beta_tail || le->beta_tail;
    }
    sort_dedup(out.values);
    return out;
}

}   // namespace

bool LinkSet::contains(const SigmaSet& v) const { return sorted_contains(values, v); }

bool LinkSet::intersects(const LinkSet& other) const {
    if ((alpha_tail && other.alpha_tail) || (beta_tail && other.beta_tail)) return true;
    return sorted_intersects(values, other.values);
}

LinkSet links(const SigmaSet& x) { return *LinksView(x); }

std::string Chain::to_string() const {
    std::string out = "⟨";
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (i) out += ",";
        out += to_text(links[i]);
    }
    out += "⟩";
    return out;
}

namespace {

// All chains whose greatest link is e, least link first, length <= max_len.
void chains_ending_at(const SigmaSet& e, std::size_t max_len,
                      std::vector<std::vector<SigmaSet>>& out) {
    out.push_back({e});
    if (max_len <= 1 || e.is_atom()) return;
    for (const auto& m : e.elements()) {
        std::vector<std::vector<SigmaSet>> sub;
        chains_ending_at(m, max_len - 1, sub);
        for (auto& c : sub) {
            c.push_back(e);
            out.push_back(std::move(c));
        }
    }
}

}   // namespace

std::vector<Chain> enumerate_chains(const SigmaSet& x, std::size_t max_len, bool proper) {
    std::vector<Chain> out;
    if (max_len == 0) return out;
    for (const auto& e : x.elements()) {
        std::vector<std::vector<SigmaSet>> ending;
        chains_ending_at(e, max_len, ending);
        for (auto& c : ending) {
            if (proper) {
                bool ok = true;
                for (const auto& l : c)
                    if (!x.contains(l)) { ok = false; break; }
                if (!ok) continue;
            }
            out.push_back(Chain{std::move(c), x});
        }
    }
    return out;
}

bool totally_different(const SigmaSet& x, const SigmaSet& y) {
    if (x.is_empty() || y.is_empty())
        throw EmptyOperand("totally_different: operands must be nonempty");
    LinksView lx(x);
    LinksView ly(y);
    return !lx->intersects(*ly);
}

SigmaSet eps_min(const SigmaSet& x) {
    if (x.is_atom()) return x;
    std::vector<SigmaSet> keep;
    for (const auto& y : x.elements()) {
        LinksView ly(y);
        if (!sorted_intersects(ly->values, x.elements())) keep.push_back(y);
    }
    return make_set(keep);
}

SigmaSet eps_max(const SigmaSet& x) {
    if (x.is_atom()) return x;
    std::vector<SigmaSet> in_links;
    for (const auto& z : x.elements()) {
        LinksView lz(z);
        in_links.insert(in_links.end(), lz->values.begin(), lz->values.end());
    }
    sort_dedup(in_links);
    std::vector<SigmaSet> keep;
    for (const auto& y : x.elements())
        if (!sorted_contains(in_links, y)) keep.push_back(y);
    return make_set(keep);
}

bool is_singleton(const SigmaSet& x) {
    return x.is_atom() || x.cardinality() == 1;
}

bool has_linear_root(const SigmaSet& x) {
    LinksView lx(x);
    for (const auto& l : lx->values)
        if (!is_singleton(l)) return false;
    return true;
}

bool is_nc_empty(const SigmaSet& x) {
    if (x.is_empty()) return false;
    return !LinksView(x)->contains(SigmaSet::empty());
}

bool is_af(const SigmaSet& f) {
    const auto elems = f.elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (!anti_intersection(a, b).is_empty()) return false;
    return true;
}

}   // namespace sigma
