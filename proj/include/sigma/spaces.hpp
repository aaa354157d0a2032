#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigma/set.hpp"

namespace sigma {

inline constexpr std::size_t kPowersetCap = 12;
inline constexpr std::size_t kGeneratedSpaceCap = 16;   // |x| + |y|
inline constexpr std::size_t kOrderCheckCap = 5;        // base set size
inline constexpr std::size_t kLoopCheckCap = 128;       // space size

// 2^x: all subsets of x. For an atom the subsets are {} and the atom itself.
// When x has both alpha and beta among its elements the subsets {alpha} and
// {beta} annihilate each other, so no set can hold them together and the
// exclusion guard rejects the construction (ExclusionViolation).
SigmaSet powerset(const SigmaSet& x, std::size_t cap = kPowersetCap);

// <2^x, 2^y> = {fuse(A,B) : A subset of x, B subset of y}, deduplicated.
SigmaSet generated_space(const SigmaSet& x, const SigmaSet& y,
                         std::size_t cap = kGeneratedSpaceCap);

// 3^x = <2^x, 2^(x*)>. Throws NoAntiset when some element of x has no
// antielement.
SigmaSet integer_space(const SigmaSet& x, std::size_t cap = kGeneratedSpaceCap);

enum class SpaceCheckKind { Loop, Order, Cardinality };

// Structured result of a conjecture check. passed is the conjunction of the
// named per-axiom flags; witnesses carry counterexamples for failed axioms
// plus, for loop checks, a non-associative triple when one exists (that is
// informational, not a failure). Checks never abort on the first failure.
struct SpaceReport {
    struct Witness {
        std::string label;
        std::vector<SigmaSet> elems;
    };

    SpaceCheckKind kind = SpaceCheckKind::Loop;
    bool passed = false;
    std::vector<std::pair<std::string, bool>> details;
    std::vector<Witness> witnesses;

    // Cardinality checks only.
    std::uint64_t actual = 0;
    std::uint64_t predicted = 0;
    bool in_hypothesis = true;

    bool detail(std::string_view name) const;
};

// |<2^(x u y), 2^(x u y*)>| against 2^|x| * 3^|y|. Inputs outside the
// conjecture's hypothesis (x with Theta-family elements, y with natural
// elements) are accepted but flagged via in_hypothesis.
SpaceReport check_cardinality_conjecture(const SigmaSet& x, const SigmaSet& y);

// Closure, unique identity {}, unique inverse per element, commutativity of
// fuse over the given space; records a non-associative triple if one exists.
SpaceReport check_loop_axioms(const SigmaSet& space);

// a <= b iff fuse(b, antiset(a)) is a subset of ground (equivalently, lies in
// 2^ground). Throws NoAntiset when a has no antiset.
bool order_leq(const SigmaSet& a, const SigmaSet& b, const SigmaSet& ground);

// b - a := fuse(b, antiset(a)).
SigmaSet order_minus(const SigmaSet& b, const SigmaSet& a);

// Reflexivity, antisymmetry, transitivity of <= over 3^x, and that the
// positive cone {A : {} <= A} equals 2^x.
SpaceReport check_partial_order(const SigmaSet& x);

// Covering relation of <= on 3^x as (lower, upper) pairs in canonical order.
// Requires check_partial_order(x) to pass.
std::vector<std::pair<SigmaSet, SigmaSet>> hasse_edges(const SigmaSet& x);

// DOT digraph of the covering relation; canonical text labels, deterministic
// node order.
std::string hasse_dot(const SigmaSet& x);

// CSV Cayley table of fuse over the given space, canonical text labels.
std::string cayley_csv(const SigmaSet& space);

}   // namespace sigma
