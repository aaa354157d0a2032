#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sigma/set.hpp"

namespace sigma {

// The seven inductive number families. Each is an infinite ladder generated
// from its seed by the successor; only finite prefixes are representable.
//
//   Naturals      1      = {alpha}
//   Antinaturals  1*     = {beta}
//   Theta         1_T    = {{}}
//   Lambda        1_L    = {{},alpha}
//   Omega         1_O    = {{},beta}
//   Gamma         1_G    = {alpha,beta}
//   Pi            1_P    = {{},alpha,beta}
enum class Family { Naturals, Antinaturals, Theta, Lambda, Omega, Gamma, Pi };

inline constexpr Family kAllFamilies[] = {
    Family::Naturals, Family::Antinaturals, Family::Theta, Family::Lambda,
    Family::Omega,    Family::Gamma,        Family::Pi,
};

// Element breadth grows linearly in n and antielement verification is
// quadratic in it; 12 keeps everything sub-second.
inline constexpr std::size_t kFamilyElementCap = 12;

SigmaSet family_seed(Family f);

// n-th element by iterated successor (element(1) = seed). Throws
// IndexOutOfRange when n is 0 or above the cap.
SigmaSet family_element(Family f, std::size_t n,
                        std::size_t cap = kFamilyElementCap);

// {element(1), ..., element(n)}.
SigmaSet family_prefix(Family f, std::size_t n,
                       std::size_t cap = kFamilyElementCap);

// CLI spellings: IN, IN*, THETA, LAMBDA, OMEGA, GAMMA, PI.
std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

// n such that v = family_element(f, n), if any. Recognition is exact and
// unbounded (the candidate index is read off the cardinality).
std::optional<std::size_t> family_index_of(Family f, const SigmaSet& v);

}   // namespace sigma
