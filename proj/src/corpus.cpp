#include "zonotopal/corpus.hpp"

#include <random>

#include "zonotopal/errors.hpp"
#include "zonotopal/geometry.hpp"

namespace zonotopal {

std::vector<GList> corpus(std::uint64_t seed, const CorpusLimits& limits) {
    require(limits.min_dim >= 1 && limits.min_dim <= limits.max_dim, ErrorKind::InvalidArgument, "bad dimension range");
    require(limits.max_size >= limits.max_dim && limits.max_entry >= 1 && limits.count >= 0, ErrorKind::InvalidArgument,
            "bad corpus limits");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<GList> out;
    for (long attempt = 0; static_cast<int>(out.size()) < limits.count; ++attempt) {
        if (attempt > 1000L * (limits.count + 1)) fail(ErrorKind::InternalError, "corpus limits admit too few lists");
        const int d = static_cast<int>(pick(limits.min_dim, limits.max_dim));
        const int n = static_cast<int>(pick(d, limits.max_size));
        FgGroup g = FgGroup::lattice(d);
        if (!limits.torsion.empty() && pick(0, 3) == 0)
            g.invariants.push_back(limits.torsion[pick(0, static_cast<long>(limits.torsion.size()) - 1)]);
        IntMatrix rows(g.coords(), std::vector<long>(n));
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < d; ++r) rows[r][j] = pick(-limits.max_entry, limits.max_entry);
            for (int t = 0; t < g.torsion_count(); ++t) rows[d + t][j] = pick(0, g.invariants[t] - 1);
        }
        GList x = GList::from_rows(rows, g);
        if (rank_of(x, x.all()) != d || !is_pointed(x)) continue;
        out.push_back(x);
    }
    return out;
}

}  // namespace zonotopal
