#include <doctest.h>

#include "helpers.hpp"
#include "sigma/annihilation.hpp"
#include "sigma/chains.hpp"
#include "sigma/families.hpp"
#include "sigma/fusion.hpp"

using namespace sigma;

TEST_CASE("family seeds") {
    CHECK(family_seed(Family::Naturals) == make_set({alpha()}));
    CHECK(family_seed(Family::Antinaturals) == make_set({beta()}));
    CHECK(family_seed(Family::Theta) == make_set({SigmaSet::empty()}));
    CHECK(family_seed(Family::Lambda) == make_set({SigmaSet::empty(), alpha()}));
    CHECK(family_seed(Family::Omega) == make_set({SigmaSet::empty(), beta()}));
    CHECK(family_seed(Family::Gamma) == make_set({alpha(), beta()}));
    CHECK(family_seed(Family::Pi) == make_set({SigmaSet::empty(), alpha(), beta()}));
}

TEST_CASE("family elements by iterated successor") {
    CHECK(family_element(Family::Naturals, 3) == make_set({alpha(), N(1), N(2)}));
    CHECK(family_element(Family::Pi, 2) ==
          make_set({SigmaSet::empty(), alpha(), beta(), family_seed(Family::Pi)}));
    CHECK(family_element(Family::Theta, 1) == make_set({SigmaSet::empty()}));
    for (Family f : kAllFamilies)
        for (std::size_t n = 1; n < 6; ++n)
            CHECK(family_element(f, n + 1) == successor(family_element(f, n)));
}

TEST_CASE("family prefixes") {
    CHECK(family_prefix(Family::Naturals, 2) == V("{1,2}"));
    CHECK(fuse(family_prefix(Family::Naturals, 3), family_prefix(Family::Antinaturals, 3)) ==
          SigmaSet::empty());
    CHECK(fuse(family_prefix(Family::Naturals, 2), family_prefix(Family::Theta, 2)) ==
          V("{1,1_T,2,2_T}"));
}

TEST_CASE("ladder minima stay at the seed") {
    for (Family f : kAllFamilies)
        for (std::size_t n = 1; n <= 8; ++n)
            CHECK(eps_min(family_element(f, n)) == family_seed(f));
}

TEST_CASE("naturals and antinaturals mirror each other") {
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(antielement(N(n)) == NS(n));
        CHECK(antielement(NS(n)) == N(n));
        CHECK(pair_fusion(N(n), NS(n)) == SigmaSet::empty());
        CHECK(pair_fusion(NS(n), N(n)) == SigmaSet::empty());
    }
}

TEST_CASE("successor commutes with mirroring") {
    for (std::size_t n = 1; n <= 9; ++n) {
        CHECK(successor(antielement(N(n)).value()) == antielement(successor(N(n))));
        CHECK(successor(antielement(NS(n)).value()) == antielement(successor(NS(n))));
    }
}

TEST_CASE("cross-family pair fusions never annihilate") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 5; ++m) {
            if (n != m) {
                CHECK(pair_fusion(N(n), NS(m)) == make_set({N(n), NS(m)}));
                CHECK(pair_fusion(NS(m), N(n)) == make_set({N(n), NS(m)}));
            }
            const SigmaSet th = family_element(Family::Theta, m);
            CHECK(pair_fusion(N(n), th) == make_set({N(n), th}));
            CHECK(pair_fusion(NS(n), th) == make_set({NS(n), th}));
        }
}

TEST_CASE("family caps and names") {
    CHECK_THROWS_AS(family_element(Family::Naturals, 0), IndexOutOfRange);
    CHECK_THROWS_AS(family_element(Family::Naturals, kFamilyElementCap + 1),
                    IndexOutOfRange);
    CHECK_THROWS_AS(family_prefix(Family::Theta, 0), IndexOutOfRange);
    CHECK(family_element(Family::Naturals, 15, 20).cardinality() == 15);

    for (Family f : kAllFamilies)
        CHECK(family_from_name(family_name(f)) == f);
    CHECK(!family_from_name("NATURALS").has_value());
}

TEST_CASE("family recognition") {
    CHECK(family_index_of(Family::Naturals, N(4)) == 4);
    CHECK(family_index_of(Family::Theta, V("3_T")) == 3);
    CHECK(!family_index_of(Family::Naturals, V("{1,2}")).has_value());
    CHECK(!family_index_of(Family::Naturals, NS(2)).has_value());
    CHECK(!family_index_of(Family::Gamma, SigmaSet::empty()).has_value());
    CHECK(!family_index_of(Family::Naturals, alpha()).has_value());
    CHECK(!family_index_of(Family::Naturals, V("pow({1,2})")).has_value());
}

// Bounded stand-in for the minimality of the naturals: within a small pool,
// every candidate that looks alpha-inductive up to the bound contains the
// whole naturals prefix.
TEST_CASE("naturals prefix is the least bounded inductive candidate") {
    constexpr std::size_t kBound = 4;
    std::vector<SigmaSet> pool = {N(1), N(2), N(3), N(4),
                                  V("{a,2}"), V("{1,2}"), V("1_T"), V("2_T")};
    auto truncated_inductive = [&](const std::vector<SigmaSet>& members) {
        const SigmaSet candidate = make_set(members);
        if (eps_min(candidate) != make_set({N(1)})) return false;
        for (const auto& x : members) {
            if (x != N(1) && !x.contains(N(1))) return false;
            if (x == N(kBound)) continue;   // successor falls outside the bound
            if (!candidate.contains(successor(x))) return false;
        }
        return true;
    };

    const SigmaSet prefix = family_prefix(Family::Naturals, kBound);
    std::size_t inductive_count = 0;
    for (std::size_t mask = 1; mask < (1u << pool.size()); ++mask) {
        std::vector<SigmaSet> members;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (1u << i)) members.push_back(pool[i]);
        if (!truncated_inductive(members)) continue;
        ++inductive_count;
        CHECK(prefix.subset_of(make_set(members)));
    }
    CHECK(inductive_count > 0);   // the prefix itself qualifies
}
