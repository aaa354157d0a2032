#include "sigma/annihilation.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

#include "sigma/chains.hpp"

namespace sigma {

namespace {

// Atomic get-or-insert over canonical identity; the construction itself runs
// unlocked, so recursive calls cannot deadlock.
class AntielementMemo {
  public:
    static AntielementMemo& instance() {
        static AntielementMemo m;
        return m;
    }

    bool lookup(const void* key, std::optional<SigmaSet>* out) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        *out = it->second;
        return true;
    }

    void store(const void* key, const std::optional<SigmaSet>& value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.try_emplace(key, value);
    }

  private:
    std::mutex mu_;
    std::unordered_map<const void*, std::optional<SigmaSet>> map_;
};

bool mirrors_into(const SigmaSet& x, const SigmaSet& min_x, const SigmaSet& other) {
    for (const auto& z : x.elements()) {
        if (min_x.contains(z)) continue;
        auto w = antielement(z);
        if (!w || !other.contains(*w)) return false;
    }
    return true;
}

}   // namespace

CompletenessBReport verify_completeness_b(const SigmaSet& x, const SigmaSet& y) {
    CompletenessBReport r;
    const SigmaSet mx = eps_min(x);
    const SigmaSet my = eps_min(y);
    r.cond_a = (mx == one() && my == one_star()) || (mx == one_star() && my == one());
    r.cond_b = !x.is_empty() && !y.is_empty() && totally_different(x, y);
    r.cond_c = mirrors_into(x, mx, y);
    r.cond_d = mirrors_into(y, my, x);
    r.holds = r.cond_a && r.cond_b && r.cond_c && r.cond_d;
    return r;
}

std::optional<SigmaSet> antielement(const SigmaSet& x) {
    auto& memo = AntielementMemo::instance();
    std::optional<SigmaSet> hit;
    if (memo.lookup(x.id(), &hit)) return hit;

    auto miss = [&]() -> std::optional<SigmaSet> {
        memo.store(x.id(), std::nullopt);
        return std::nullopt;
    };

    if (x.is_atom() || x.is_empty()) return miss();

    const SigmaSet m = eps_min(x);
    AtomTag root;
    if (m == one())
        root = AtomTag::Beta;
    else if (m == one_star())
        root = AtomTag::Alpha;
    else
        return miss();

    std::vector<SigmaSet> mirror{SigmaSet::atom(root)};
    for (const auto& z : x.elements()) {
        if (m.contains(z)) continue;
        auto za = antielement(z);
        if (!za) return miss();
        mirror.push_back(*za);
    }

    const SigmaSet y = make_set(mirror);
    if (!verify_completeness_b(x, y).holds) return miss();

    memo.store(x.id(), y);
    memo.store(y.id(), x);
    return y;
}

SigmaSet pair_fusion(const SigmaSet& x, const SigmaSet& y) {
    auto m = antielement(x);
    if (m && *m == y) return SigmaSet::empty();
    return make_set({x, y});
}

}   // namespace sigma
