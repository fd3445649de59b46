#pragma once

#include <cstdint>
#include <vector>

#include "zonotopal/abelian.hpp"

namespace zonotopal {

struct CorpusLimits {
    int min_dim = 1;
    int max_dim = 3;
    int max_size = 7;
    long max_entry = 3;
    std::vector<long> torsion{2, 3, 4};  // empty: lattices only
    int count = 50;
};

// Deterministic batch of full-rank pointed lists.
std::vector<GList> corpus(std::uint64_t seed, const CorpusLimits& limits = {});

}  // namespace zonotopal
