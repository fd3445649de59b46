#include "zonotopal/toric.hpp"

#include <algorithm>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

Character Character::trivial(const FgGroup& g) {
    return Character{RatVec(g.free_rank, Rational(0)), RatVec(g.torsion_count(), Rational(0))};
}

bool Character::is_trivial() const {
    for (const auto& q : theta)
        if (q != 0) return false;
    for (const auto& q : tors)
        if (q != 0) return false;
    return true;
}

Rational Character::phase(const GElement& g) const {
    Rational s = 0;
    for (size_t i = 0; i < theta.size(); ++i) s += theta[i] * g.free.at(i);
    for (size_t i = 0; i < tors.size(); ++i) s += tors[i] * g.tors.at(i);
    return frac_part(s);
}

Rational Character::phase(const std::vector<long>& free) const {
    Rational s = 0;
    for (size_t i = 0; i < theta.size(); ++i) s += theta[i] * free.at(i);
    return frac_part(s);
}

long Character::order() const {
    long n = 1;
    for (const auto& q : theta) n = lcm_long(n, q.get_den().get_si());
    for (const auto& q : tors) n = lcm_long(n, q.get_den().get_si());
    return n;
}

std::string Character::str() const {
    std::string s = "(";
    for (size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + to_string(theta[i]);
    if (!tors.empty()) {
        s += ";";
        for (size_t i = 0; i < tors.size(); ++i) s += (i ? "," : "") + to_string(tors[i]);
    }
    return s + ")";
}

namespace {
Cyclotomic root_from_phase(const Rational& ph) {
    long n = ph.get_den().get_si();
    long k = ph.get_num().get_si();
    return Cyclotomic::root_of_unity(n, k);
}
}  // namespace

Cyclotomic evaluate(const Character& c, const GElement& g) { return root_from_phase(c.phase(g)); }

Cyclotomic evaluate(const Character& c, const std::vector<long>& lattice_point) {
    return root_from_phase(c.phase(lattice_point));
}

std::vector<Character> annihilator(const GList& x, const IndexSet& s) {
    const FgGroup& g = x.group();
    const int n = g.coords();
    if (n == 0) return {Character{}};
    IntMatrix m(n, std::vector<long>(s.size() + g.torsion_count(), 0));
    for (size_t j = 0; j < s.size(); ++j) {
        auto c = x.coords(s[j]);
        for (int i = 0; i < n; ++i) m[i][j] = c[i];
    }
    for (int k = 0; k < g.torsion_count(); ++k) m[g.free_rank + k][s.size() + k] = g.invariants[k];
    const int cols = static_cast<int>(m[0].size());
    // theta^T M in Z^cols. With U M V = D put theta' = U^{-T} theta, so theta'_i D_ii in Z.
    std::vector<long> dvals(n, 0);
    IntMatrix u = identity_matrix(n);
    if (cols > 0) {
        SmithForm f = snf(m);
        u = f.U;
        for (int i = 0; i < std::min(n, cols); ++i) dvals[i] = f.D[i][i];
    }
    for (long v : dvals)
        if (v == 0) fail(ErrorKind::RankDeficient, "sublist does not generate a finite-index subgroup");
    std::vector<Character> out;
    std::vector<long> a(n, 0);
    while (true) {
        Character c;
        RatVec full(n, Rational(0));
        for (int j = 0; j < n; ++j) {
            Rational tj(a[j], dvals[j]);
            tj.canonicalize();
            if (tj == 0) continue;
            for (int i = 0; i < n; ++i) full[i] += Rational(u[j][i]) * tj;
        }
        for (int i = 0; i < n; ++i) full[i] = frac_part(full[i]);
        c.theta.assign(full.begin(), full.begin() + g.free_rank);
        c.tors.assign(full.begin() + g.free_rank, full.end());
        out.push_back(c);
        int k = 0;
        while (k < n && ++a[k] == dvals[k]) a[k++] = 0;
        if (k == n) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IndexSet fixed_sublist(const GList& x, const Character& c) {
    IndexSet out;
    for (int i = 0; i < x.size(); ++i)
        if (c.phase(x[i]) == 0) out.push_back(i);
    return out;
}

int torsion_outside(const GList& x, const IndexSet& x_phi) {
    int n = 0;
    for (int i = 0; i < x.size(); ++i)
        if (x.is_torsion(i) && !std::binary_search(x_phi.begin(), x_phi.end(), i)) ++n;
    return n;
}

std::vector<VertexData> vertices(const GList& x) {
    std::set<Character> chars;
    for (const auto& b : bases(x))
        for (auto& c : annihilator(x, b)) chars.insert(c);
    std::vector<VertexData> out;
    for (const auto& c : chars) {
        VertexData v;
        v.character = c;
        v.x_phi = fixed_sublist(x, c);
        v.tors_count = torsion_outside(x, v.x_phi);
        if (rank_of(x, v.x_phi) != x.dim()) fail(ErrorKind::InternalError, "vertex sublist does not span");
        out.push_back(v);
    }
    return out;
}

}  // namespace zonotopal
