#pragma once

#include <string>
#include <vector>

#include "zonotopal/abelian.hpp"
#include "zonotopal/cyclotomic.hpp"

namespace zonotopal {

// e_phi(g) = exp(2 pi i (theta . free(g) + tors . tors(g))); entries in [0,1).
struct Character {
    RatVec theta;
    RatVec tors;

    static Character trivial(const FgGroup& g);
    bool is_trivial() const;
    // theta . free + tors . tors mod 1, in [0,1)
    Rational phase(const GElement& g) const;
    Rational phase(const std::vector<long>& free) const;  // torsion part zero
    // Smallest n with n * phase in Z for every group element.
    long order() const;
    std::string str() const;  // "(1/2,1/2)" or "(0;1/2)" with torsion after ';'

    friend bool operator==(const Character& a, const Character& b) {
        return a.theta == b.theta && a.tors == b.tors;
    }
    friend bool operator<(const Character& a, const Character& b) {
        return a.theta != b.theta ? a.theta < b.theta : a.tors < b.tors;
    }
};

Cyclotomic evaluate(const Character& c, const GElement& g);
Cyclotomic evaluate(const Character& c, const std::vector<long>& lattice_point);

struct VertexData {
    Character character;
    IndexSet x_phi;
    int tors_count = 0;  // |X_t \ X_phi|
};

std::vector<VertexData> vertices(const GList& x);

// Characters of G killing every element indexed by s (|G/<s>| of them when finite).
std::vector<Character> annihilator(const GList& x, const IndexSet& s);

IndexSet fixed_sublist(const GList& x, const Character& c);
int torsion_outside(const GList& x, const IndexSet& x_phi);

}  // namespace zonotopal
