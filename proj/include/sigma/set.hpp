#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction asked for a set containing both a value and its antielement.
struct ExclusionViolation : Error {
    using Error::Error;
};
// An enumeration or space construction would exceed its configured cap.
struct BoundsTooLarge : Error {
    using Error::Error;
};
struct EmptyOperand : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NoAntiset : Error {
    using Error::Error;
};
struct EmptySequence : Error {
    using Error::Error;
};

enum class AtomTag : unsigned char { Alpha, Beta };

namespace detail {
struct Node;
}

// A canonical, immutable, hereditarily finite sigma-set over the opaque atoms
// alpha, beta and the empty set.
//
// Values are interned: two SigmaSets are structurally equal iff they hold the
// same node pointer, so equality is O(1) and values are freely shareable
// between threads. The atoms stand for the two epsilon-linear singletons whose
// (infinite, linear) membership tails are not representable; all operations
// treat them as having no representable members.
//
// Every composite value keeps its elements sorted under the kernel total
// order with no duplicates, and construction rejects sets that would contain
// both a value and its antielement (ExclusionViolation).
class SigmaSet {
  public:
    // Default-constructed value is the empty set.
    SigmaSet();

    static SigmaSet empty();
    static SigmaSet atom(AtomTag tag);

    bool is_atom() const;
    bool is_empty() const;   // true only for {}, not for atoms
    AtomTag atom_tag() const;   // precondition: is_atom()

    // Canonical element sequence; empty for atoms and for {}.
    std::span<const SigmaSet> elements() const;

    // Atoms count 1: they are singletons whose member is unrepresentable.
    std::size_t cardinality() const;

    // Nesting depth: 0 for {} and atoms, 1 + max over elements otherwise.
    std::size_t depth() const;

    bool contains(const SigmaSet& x) const;
    bool subset_of(const SigmaSet& y) const;

    // Stable identity token of the interned node (usable as a cache key).
    const void* id() const { return node_; }

    friend bool operator==(const SigmaSet& a, const SigmaSet& b) {
        return a.node_ == b.node_;
    }

  private:
    explicit SigmaSet(const detail::Node* n) : node_(n) {}
    const detail::Node* node_;
    friend struct detail::Node;
    friend std::strong_ordering compare(const SigmaSet&, const SigmaSet&);
    friend SigmaSet make_set(std::span<const SigmaSet>);
};

inline SigmaSet alpha() { return SigmaSet::atom(AtomTag::Alpha); }
inline SigmaSet beta() { return SigmaSet::atom(AtomTag::Beta); }

// The sigma-sets 1 = {alpha} and 1* = {beta}.
SigmaSet one();
SigmaSet one_star();

// Canonical set of the deduplicated items. Throws ExclusionViolation when two
// items annihilate each other.
SigmaSet make_set(std::span<const SigmaSet> items);
SigmaSet make_set(std::initializer_list<SigmaSet> items);

// Total order: atoms first (Alpha < Beta), then composites compared
// lexicographically by element sequence, a strict prefix ordering shorter
// first. EQ coincides with structural equality.
std::strong_ordering compare(const SigmaSet& a, const SigmaSet& b);

inline bool operator<(const SigmaSet& a, const SigmaSet& b) {
    return compare(a, b) < 0;
}

SigmaSet intersect(const SigmaSet& x, const SigmaSet& y);
SigmaSet difference(const SigmaSet& x, const SigmaSet& y);

struct UniverseBounds {
    std::size_t max_depth = 0;
    std::size_t max_breadth = 0;
};

inline constexpr std::size_t kDefaultUniverseCap = 2'000'000;

// All canonical sigma-sets of depth <= max_depth whose sets all have
// <= max_breadth elements, built from {}, alpha, beta under the exclusion
// guard. Sorted under the kernel order, duplicate-free and deterministic.
// Throws BoundsTooLarge when the projected count (binomial upper bound)
// exceeds max_count.
std::vector<SigmaSet> enumerate_universe(UniverseBounds bounds,
                                         std::size_t max_count = kDefaultUniverseCap);

// Compact JSON value encoding: {"atom":"alpha"|"beta"} and {"set":[...]} with
// elements in canonical order; {} encodes as {"set":[]}. Byte-stable.
std::string to_json(const SigmaSet& v);
SigmaSet from_json(std::string_view text);

// Canonical plain-text rendering: "a", "b", "{}", "{a,{a}}", elements in
// canonical order.
std::string to_text(const SigmaSet& v);

}   // namespace sigma

template <>
struct std::hash<sigma::SigmaSet> {
    std::size_t operator()(const sigma::SigmaSet& s) const noexcept {
        return std::hash<const void*>{}(s.id());
    }
};
