#include <doctest.h>

#include <functional>

#include "zonotopal/abelian.hpp"
#include "zonotopal/corpus.hpp"
#include "zonotopal/matroid.hpp"
#include "zonotopal/polyspace.hpp"
#include "zonotopal/series.hpp"

using namespace zonotopal;

namespace {

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

MPoly s(int nv, int j) { return MPoly::variable(VarKind::S, nv, j); }
MPoly t(int nv, int j) { return MPoly::variable(VarKind::T, nv, j); }

std::vector<int> as_ints(const std::vector<Integer>& v) {
    std::vector<int> out;
    for (const auto& z : v) out.push_back(static_cast<int>(z.get_si()));
    return out;
}

bool has_coloop(const GList& x) {
    for (int i = 0; i < x.size(); ++i)
        if (is_coloop(x, i)) return true;
    return false;
}

std::vector<GList> lattice_lists() {
    CorpusLimits lim;
    lim.torsion = {};
    lim.max_size = 6;
    lim.count = 15;
    return corpus(23, lim);
}

GList zp() { return GList::from_rows({{1, 0, 1, 1}, {0, 1, 1, -1}}); }

}  // namespace

TEST_CASE("small spaces") {
    GList x = GList::from_rows({{1, 1}, {0, 2}});
    CHECK(p_product(x, {0, 1}) == s(3, 1) * (s(3, 1) + s(3, 2) * Cyclotomic(2)));
    CHECK(linear_form(x, 1) == s(3, 1) + s(3, 2) * Cyclotomic(2));

    GList ones = GList::from_rows({{1, 1}});
    GradedSpan p = p_basis(ones);
    CHECK(p.hilbert() == std::vector<int>{1, 1});
    CHECK(in_span(p.basis, s(2, 1)));
    TruncatedSeries sq(s(2, 1) * s(2, 1), 2);
    CHECK(psi_project(ones, sq).is_zero());

    GradedSpan d = d_basis(zp());
    CHECK(d.dim() == 6);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) CHECK(in_span(d.basis, t(2, 0).pow(a) * t(2, 1).pow(b)));
    GradedSpan pm = internal_p_basis(zp());
    CHECK(pm.hilbert() == std::vector<int>{1, 2});
    CHECK(in_span(pm.basis, s(3, 1)));
    CHECK(in_span(pm.basis, s(3, 2)));
    CHECK(!in_span(pm.basis, s(3, 1) * s(3, 2)));
    CHECK(p_basis(zp()).hilbert() == std::vector<int>{1, 2, 3});

    // a coloop leaves no internal space
    CHECK(internal_p_basis(GList::from_rows({{2, 0}, {0, 2}})).dim() == 0);
    CHECK(rank_zero_elements(GList::from_rows({{1, 0}, {0, 0}})) == IndexSet{1});
}

TEST_CASE("pairing") {
    const int nv = 3;
    MPoly f = t(2, 0).pow(2) * t(2, 1);
    CHECK(pair(s(nv, 1) * s(nv, 1) * s(nv, 2), f) == Cyclotomic(2));
    CHECK(pair(s(nv, 1), f).is_zero());
    CHECK(pair(MPoly::constant(VarKind::S, nv, Cyclotomic(1)), MPoly::constant(VarKind::T, 2, Cyclotomic(5))) ==
          Cyclotomic(5));
}

TEST_CASE("spaces on lattice lists") {
    for (const GList& x : lattice_lists()) {
        const int n = x.size(), d = x.dim();
        BivarPoly tt = tutte(x);
        GradedSpan p = p_basis(x);
        GradedSpan dd = d_basis(x);
        CHECK(p.hilbert() == as_ints(tt.hilbert_form(1, n - d)));
        CHECK(dd.dim() == p.dim());
        CHECK(poly_rank(p.basis) == p.dim());
        CHECK(poly_rank(dd.basis) == dd.dim());

        // P is spanned by the products over complements of spanning sublists
        std::vector<MPoly> gens;
        for (int mask = 0; mask < (1 << n); ++mask) {
            IndexSet keep, drop;
            for (int i = 0; i < n; ++i) (mask >> i & 1 ? keep : drop).push_back(i);
            if (rank_of(x, keep) == d) gens.push_back(p_product(x, drop));
        }
        CHECK(poly_rank(gens) == p.dim());
        for (const MPoly& b : p.basis) CHECK(in_span(gens, b));

        // cocircuit operators kill D
        for (const IndexSet& c : cocircuits(x)) {
            MPoly op = p_product(x, c);
            for (const MPoly& f : dd.basis) CHECK(apply_operator(op, f).is_zero());
        }

        // P and D are dual under the pairing
        std::vector<MPoly> rows;
        for (const MPoly& a : p.basis) {
            MPoly row(VarKind::S, 1 + static_cast<int>(dd.basis.size()));
            for (size_t j = 0; j < dd.basis.size(); ++j) {
                Exponent e(row.nvars(), 0);
                e[j] = 1;
                row.add_term(e, pair(a, dd.basis[j]));
            }
            rows.push_back(row);
        }
        CHECK(poly_rank(rows) == p.dim());

        GradedSpan pm = internal_p_basis(x);
        if (has_coloop(x)) {
            CHECK(pm.dim() == 0);
        } else {
            CHECK(pm.hilbert() == as_ints(tt.hilbert_form(0, n - d)));
            for (const MPoly& b : pm.basis) CHECK(in_span(p.basis, b));
        }
    }
}

TEST_CASE("the projection onto P") {
    for (const GList& x : lattice_lists()) {
        PsiProjector psi(x);
        const int nv = x.dim() + 1;
        GradedSpan p = p_basis(x);
        for (const MPoly& b : p.basis) CHECK(psi.project(b) == b);
        // the cocircuit ideal is killed
        for (const IndexSet& c : cocircuits(x)) {
            MPoly g = p_product(x, c);
            CHECK(psi.project(g).is_zero());
            CHECK(psi.project(g * s(nv, 1)).is_zero());
        }
        MPoly f = (s(nv, 1) + MPoly::constant(VarKind::S, nv, Cyclotomic(2))).pow(psi.top_degree() + 1);
        MPoly once = psi.project(f);
        CHECK(psi.project(once) == once);
        CHECK(in_span(p.basis, once));

        // <psi(e^{z.s}), f> = f(z) for f in D
        GradedSpan dd = d_basis(x);
        std::vector<Rational> z;
        for (int j = 0; j < x.dim(); ++j) z.push_back(q(2 * j + 1, 3) - j);
        MPoly lin = MPoly::linear(VarKind::S, nv, 1, z);
        MPoly e = psi_project(x, exp_series(lin, psi.top_degree()));
        for (const MPoly& g : dd.basis) CHECK(pair(e, g) == g.evaluate(z));
    }
}
