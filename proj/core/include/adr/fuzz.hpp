#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "adr/qh.hpp"

namespace adr {

struct FuzzConfig {
    uint64_t seed = 1;
    int count = 50;
    PrimeField field;
    int cap = 10;           // rewriting cap for generated presentations
    size_t max_dim = 60;    // dim A bound
    int max_catalog = 9;    // keeps the chain search tractable
    int search_bound = 12;
};

struct PropertyCounts {
    int pass = 0;
    int fail = 0;
    int skip = 0;
};

struct FuzzSummary {
    int instances = 0;
    std::map<std::string, PropertyCounts> props;
    std::vector<std::string> failures;
    bool ok() const {
        for (const auto& [k, v] : props)
            if (v.fail) return false;
        return true;
    }
};

// Random admissible presentation (<= 5 vertices, <= 6 arrows, <= 3 monomial
// relations); serial shapes are mixed in so that both branches of the
// Theorem-3.1 dichotomy appear.
Presentation random_presentation(std::mt19937_64& rng, const FuzzConfig& cfg);

// Random semilocal module: a few random quotients of projectives.
std::vector<NamedRep> random_semilocal(std::mt19937_64& rng, const Presentation& pres,
                                       int max_locals = 3);

// Runs the asserted invariants (stratification soundness, Theorem 2.1,
// Lemma 2.3, Lemma 3.2, Corollary 2.7, the classical bound, Prop. 1.7 and the
// Theorem 3.1 equivalence) on `count` random instances.
FuzzSummary run_property_suites(const FuzzConfig& cfg);

}  // namespace adr
