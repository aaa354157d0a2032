#include "sigma/fusion.hpp"

#include <vector>

#include "sigma/annihilation.hpp"

namespace sigma {

SigmaSet anti_intersection(const SigmaSet& x, const SigmaSet& y) {
    std::vector<SigmaSet> kept;
    for (const auto& z : x.elements()) {
        auto m = antielement(z);
        if (m && y.contains(*m)) kept.push_back(z);
    }
    return make_set(kept);
}

SigmaSet star_difference(const SigmaSet& x, const SigmaSet& y) {
    return difference(x, anti_intersection(x, y));
}

SigmaSet fuse(const SigmaSet& x, const SigmaSet& y) {
    if (x == y) return x;
    if (x.is_empty()) return y;
    if (y.is_empty()) return x;
    if (x.is_atom() || y.is_atom())
        throw Error("fuse: an atom operand has unrepresentable members");
    const SigmaSet a = star_difference(x, y);
    const SigmaSet b = star_difference(y, x);
    std::vector<SigmaSet> elems(a.elements().begin(), a.elements().end());
    elems.insert(elems.end(), b.elements().begin(), b.elements().end());
    // Star-difference already removed every annihilating cross pair, so the
    // exclusion guard cannot fire here.
    return make_set(elems);
}

FusionChain fuse_chain(std::span<const SigmaSet> operands) {
    if (operands.empty())
        throw EmptySequence("fuse_chain: at least one operand required");
    FusionChain fc;
    fc.operands.assign(operands.begin(), operands.end());
    SigmaSet acc = operands[0];
    for (std::size_t i = 1; i < operands.size(); ++i)
        acc = fuse(acc, operands[i]);
    fc.result = acc;
    return fc;
}

std::optional<SigmaSet> antiset(const SigmaSet& x) {
    if (x.is_empty()) return SigmaSet::empty();
    if (x.is_atom()) return std::nullopt;
    std::vector<SigmaSet> mirror;
    mirror.reserve(x.cardinality());
    for (const auto& z : x.elements()) {
        auto m = antielement(z);
        if (!m) return std::nullopt;
        mirror.push_back(*m);
    }
    return make_set(mirror);
}

SigmaSet successor(const SigmaSet& x) {
    if (x.is_atom())
        throw Error("successor: an atom operand has unrepresentable members");
    std::vector<SigmaSet> elems(x.elements().begin(), x.elements().end());
    elems.push_back(x);
    return make_set(elems);
}

}   // namespace sigma
