#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sigma/set.hpp"

namespace sigma {

// {z in x : antielement(z) exists and lies in y}; always a subset of x.
SigmaSet anti_intersection(const SigmaSet& x, const SigmaSet& y);

// x minus its annihilated part: x - (x ^ y).
SigmaSet star_difference(const SigmaSet& x, const SigmaSet& y);

// Annihilating fusion: the elements of (x / y) together with (y / x).
// Commutative and idempotent with identity {}. Throws Error for an atom
// operand other than the x u x / x u {} shortcuts, whose result would contain
// the atom's unrepresentable members.
SigmaSet fuse(const SigmaSet& x, const SigmaSet& y);

// Strict left fold of fuse; operand order is semantically significant since
// fusion is not associative.
struct FusionChain {
    std::vector<SigmaSet> operands;
    SigmaSet result;
};

FusionChain fuse_chain(std::span<const SigmaSet> operands);   // EmptySequence

// Elementwise mirror {antielement(z) : z in x} when every element has one;
// then fuse(x, *antiset(x)) = {}. antiset({}) = {}.
std::optional<SigmaSet> antiset(const SigmaSet& x);

// S(x) = x u {x}, i.e. the elements of x together with x itself.
SigmaSet successor(const SigmaSet& x);

}   // namespace sigma
