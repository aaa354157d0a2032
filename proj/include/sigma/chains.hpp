#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sigma/set.hpp"

namespace sigma {

// Hereditary-closure fingerprint of a value: every proper hereditary member
// (equivalently, every representable link of some epsilon-chain), plus one
// tail marker per atom that occurs hereditarily. The markers stand for the
// atoms' unrepresentable descending tails; the two tails are disjoint from
// each other and from every representable value.
struct LinkSet {
    std::vector<SigmaSet> values;   // sorted canonical, duplicate-free
    bool alpha_tail = false;
    bool beta_tail = false;

    bool contains(const SigmaSet& v) const;
    bool intersects(const LinkSet& other) const;
};

LinkSet links(const SigmaSet& x);

// Membership path x1 in x2 in ... in xk in parent.
struct Chain {
    std::vector<SigmaSet> links;   // least link first; nonempty
    SigmaSet parent;

    std::string to_string() const;   // "<x,...,w>" for diagnostics
};

// All chains of x with at most max_len links, in deterministic order. With
// proper=true, keeps only chains all of whose links are elements of x.
std::vector<Chain> enumerate_chains(const SigmaSet& x, std::size_t max_len,
                                    bool proper = false);

// True iff no epsilon-chain of x shares a link with any epsilon-chain of y,
// tail markers included. Throws EmptyOperand when either operand is {}.
bool totally_different(const SigmaSet& x, const SigmaSet& y);

// Elements of x none of whose chain links lie in x; an atom is its own min.
SigmaSet eps_min(const SigmaSet& x);
// Elements of x appearing in no chain of any element of x; atom is its own max.
SigmaSet eps_max(const SigmaSet& x);

bool is_singleton(const SigmaSet& x);      // atoms count as singletons
bool has_linear_root(const SigmaSet& x);   // every link a singleton
bool is_nc_empty(const SigmaSet& x);       // nonempty and {} never a link
bool is_af(const SigmaSet& f);             // no two elements annihilate

}   // namespace sigma
