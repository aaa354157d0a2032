#pragma once

#include <string_view>
#include <vector>

#include "sigma/families.hpp"
#include "sigma/frontend.hpp"

// Evaluate an expression that must denote a set; test shorthand.
inline sigma::SigmaSet V(std::string_view text) {
    return std::get<sigma::SigmaSet>(sigma::lang::evaluate(text));
}

inline sigma::SigmaSet N(std::size_t n) {
    return sigma::family_element(sigma::Family::Naturals, n);
}

inline sigma::SigmaSet NS(std::size_t n) {
    return sigma::family_element(sigma::Family::Antinaturals, n);
}

inline const std::vector<sigma::SigmaSet>& universe22() {
    static const std::vector<sigma::SigmaSet> u = sigma::enumerate_universe({2, 2});
    return u;
}
