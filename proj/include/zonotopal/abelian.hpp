#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zonotopal/rational.hpp"

namespace zonotopal {

using IndexSet = std::vector<int>;               // sorted, 0-based
using IntMatrix = std::vector<std::vector<long>>;  // row-major

// Z^d + Z/k_1 + ... with k_i | k_{i+1}, k_i >= 2.
struct FgGroup {
    int free_rank = 0;
    std::vector<long> invariants;

    int torsion_count() const { return static_cast<int>(invariants.size()); }
    int coords() const { return free_rank + torsion_count(); }
    long torsion_order() const;

    static FgGroup lattice(int d);
    // "Z^2", "Z^1 + Z/2", "Z/4", "Z^0 + Z/2 + Z/4"
    static FgGroup parse(std::string_view spec);
    std::string str() const;

    friend bool operator==(const FgGroup& a, const FgGroup& b) {
        return a.free_rank == b.free_rank && a.invariants == b.invariants;
    }
};

struct GElement {
    std::vector<long> free;
    std::vector<long> tors;

    friend bool operator==(const GElement& a, const GElement& b) { return a.free == b.free && a.tors == b.tors; }
    friend bool operator<(const GElement& a, const GElement& b) {
        return a.free != b.free ? a.free < b.free : a.tors < b.tors;
    }
};

class GList {
public:
    GList() = default;
    GList(FgGroup group, std::vector<GElement> elems);
    // rows: free coordinates first, then one residue row per torsion invariant;
    // column j is the j-th list element.
    static GList from_rows(const IntMatrix& rows, const FgGroup& group);
    static GList from_rows(const IntMatrix& rows);  // lattice Z^{#rows}

    const FgGroup& group() const { return group_; }
    const std::vector<GElement>& elems() const { return elems_; }
    const GElement& operator[](int i) const { return elems_.at(i); }
    int size() const { return static_cast<int>(elems_.size()); }
    int dim() const { return group_.free_rank; }
    bool is_lattice() const { return group_.invariants.empty(); }
    bool is_torsion(int i) const;  // free part zero
    std::vector<long> coords(int i) const;  // free then torsion
    RatVec free_vector(int i) const;

    GList sublist(const IndexSet& idx) const;
    GList deleted(int i) const;
    IndexSet all() const;
    IntMatrix rows() const;
    std::string str() const;

private:
    FgGroup group_;
    std::vector<GElement> elems_;
};

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V = D
};
SmithForm snf(const IntMatrix& m);

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

long multiplicity(const GList& x, const IndexSet& s);
int rank_of(const GList& x, const IndexSet& s);
bool is_coloop(const GList& x, int i);

// Quotient by <x_i>. proj maps old coordinates to new ones (new free
// coordinates first, then torsion); char_down maps a character vector on G
// killing x_i to one on the quotient.
struct Contraction {
    GList list;        // X \ x_i pushed to G / <x_i>
    IndexSet kept;     // original indices of list elements
    IntMatrix proj;    // (d'+t') x (d+t)
    IntMatrix char_down;  // (d'+t') x (d+t), rows of U^{-T}
    GElement image(const GElement& g) const;
};
Contraction contract(const GList& x, int i);

// Checked integer helpers.
long checked_add(long a, long b);
long checked_mul(long a, long b);
long mod_floor(long a, long m);

// Primitive integer vector spanning the rational line of v (sign kept).
std::vector<long> primitive(const std::vector<long>& v);
// Integer vectors spanning the lattice {y in Z^d : eta . y = 0} for primitive eta.
IntMatrix lattice_kernel(const std::vector<long>& eta);
// Unimodular integer matrix whose first row is the primitive vector eta.
IntMatrix complete_unimodular(const std::vector<long>& eta);

}  // namespace zonotopal
