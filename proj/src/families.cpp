#include "sigma/families.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "sigma/fusion.hpp"

namespace sigma {

SigmaSet family_seed(Family f) {
    switch (f) {
        case Family::Naturals:      return make_set({alpha()});
        case Family::Antinaturals:  return make_set({beta()});
        case Family::Theta:         return make_set({SigmaSet::empty()});
        case Family::Lambda:        return make_set({SigmaSet::empty(), alpha()});
        case Family::Omega:         return make_set({SigmaSet::empty(), beta()});
        case Family::Gamma:         return make_set({alpha(), beta()});
        case Family::Pi:            return make_set({SigmaSet::empty(), alpha(), beta()});
    }
    throw Error("family_seed: unknown family");
}

namespace {

// Ladders are extended on demand and shared; results are immutable values.
class Ladders {
  public:
    static Ladders& instance() {
        static Ladders l;
        return l;
    }

    SigmaSet element(Family f, std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& chain = chains_[static_cast<std::size_t>(f)];
        if (chain.empty()) chain.push_back(family_seed(f));
        while (chain.size() < n) chain.push_back(successor(chain.back()));
        return chain[n - 1];
    }

  private:
    std::mutex mu_;
    std::vector<SigmaSet> chains_[7];
};

}   // namespace

SigmaSet family_element(Family f, std::size_t n, std::size_t cap) {
    if (n == 0 || n > cap)
        throw IndexOutOfRange("family_element: index " + std::to_string(n) +
                              " outside 1.." + std::to_string(cap));
    return Ladders::instance().element(f, n);
}

SigmaSet family_prefix(Family f, std::size_t n, std::size_t cap) {
    if (n == 0 || n > cap)
        throw IndexOutOfRange("family_prefix: index " + std::to_string(n) +
                              " outside 1.." + std::to_string(cap));
    std::vector<SigmaSet> elems;
    elems.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        elems.push_back(Ladders::instance().element(f, i));
    return make_set(elems);
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "IN") return Family::Naturals;
    if (name == "IN*") return Family::Antinaturals;
    if (name == "THETA") return Family::Theta;
    if (name == "LAMBDA") return Family::Lambda;
    if (name == "OMEGA") return Family::Omega;
    if (name == "GAMMA") return Family::Gamma;
    if (name == "PI") return Family::Pi;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Naturals:      return "IN";
        case Family::Antinaturals:  return "IN*";
        case Family::Theta:         return "THETA";
        case Family::Lambda:        return "LAMBDA";
        case Family::Omega:         return "OMEGA";
        case Family::Gamma:         return "GAMMA";
        case Family::Pi:            return "PI";
    }
    return "?";
}

std::optional<std::size_t> family_index_of(Family f, const SigmaSet& v) {
    if (v.is_atom() || v.is_empty()) return std::nullopt;
    // element(n) has seed cardinality + n - 1 members, so the candidate index
    // is read off the cardinality. Unrelated sets bail out at the first
    // missing ladder member, so they never force ladder growth.
    const std::size_t seed_card = family_seed(f).cardinality();
    const std::size_t card = v.cardinality();
    if (card < seed_card) return std::nullopt;
    const std::size_t n = card - seed_card + 1;
    for (std::size_t k = 1; k < n; ++k)
        if (!v.contains(Ladders::instance().element(f, k))) return std::nullopt;
    if (Ladders::instance().element(f, n) == v) return n;
    return std::nullopt;
}

}   // namespace sigma
