#include "zonotopal/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::InternalError, "integer overflow");
    return r;
}

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::InternalError, "integer overflow");
    return r;
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long FgGroup::torsion_order() const {
    long o = 1;
    for (long k : invariants) o = checked_mul(o, k);
    return o;
}

FgGroup FgGroup::lattice(int d) { return FgGroup{d, {}}; }

FgGroup FgGroup::parse(std::string_view spec) {
    FgGroup g;
    std::string s;
    for (char ch : spec)
        if (ch != ' ') s += ch;
    if (s.empty()) fail(ErrorKind::InvalidArgument, "empty group spec");
    size_t pos = 0;
    bool seen_free = false;
    while (pos <= s.size()) {
        size_t next = s.find('+', pos);
        std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.rfind("Z/", 0) == 0) {
            long k = std::strtol(part.c_str() + 2, nullptr, 10);
            if (k < 2) fail(ErrorKind::InvalidArgument, "torsion invariant must be >= 2 in '" + part + "'");
            g.invariants.push_back(k);
        } else if (part == "Z") {
            if (seen_free) fail(ErrorKind::InvalidArgument, "repeated free part in group spec");
            g.free_rank = 1;
            seen_free = true;
        } else if (part.rfind("Z^", 0) == 0) {
            if (seen_free) fail(ErrorKind::InvalidArgument, "repeated free part in group spec");
            g.free_rank = static_cast<int>(std::strtol(part.c_str() + 2, nullptr, 10));
            if (g.free_rank < 0) fail(ErrorKind::InvalidArgument, "negative rank");
            seen_free = true;
        } else {
            fail(ErrorKind::InvalidArgument, "cannot parse group component '" + part + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    for (size_t i = 0; i + 1 < g.invariants.size(); ++i)
        if (g.invariants[i + 1] % g.invariants[i] != 0)
            fail(ErrorKind::InvalidArgument, "torsion invariants must satisfy k_i | k_{i+1}");
    return g;
}

std::string FgGroup::str() const {
    std::string out = "Z^" + std::to_string(free_rank);
    for (long k : invariants) out += " + Z/" + std::to_string(k);
    return out;
}

GList::GList(FgGroup group, std::vector<GElement> elems) : group_(std::move(group)), elems_(std::move(elems)) {
    for (auto& e : elems_) {
        if (static_cast<int>(e.free.size()) != group_.free_rank ||
            static_cast<int>(e.tors.size()) != group_.torsion_count())
            fail(ErrorKind::InvalidArgument, "element does not match the group shape");
        for (size_t i = 0; i < e.tors.size(); ++i) e.tors[i] = mod_floor(e.tors[i], group_.invariants[i]);
    }
}

GList GList::from_rows(const IntMatrix& rows, const FgGroup& group) {
    if (static_cast<int>(rows.size()) != group.coords())
        fail(ErrorKind::InvalidArgument, "matrix has " + std::to_string(rows.size()) + " rows but the group needs " +
                                             std::to_string(group.coords()));
    size_t n = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) fail(ErrorKind::InvalidArgument, "ragged matrix");
    std::vector<GElement> elems(n);
    for (size_t j = 0; j < n; ++j) {
        for (int i = 0; i < group.free_rank; ++i) elems[j].free.push_back(rows[i][j]);
        for (int i = 0; i < group.torsion_count(); ++i) elems[j].tors.push_back(rows[group.free_rank + i][j]);
    }
    return GList(group, std::move(elems));
}

GList GList::from_rows(const IntMatrix& rows) {
    return from_rows(rows, FgGroup::lattice(static_cast<int>(rows.size())));
}

bool GList::is_torsion(int i) const {
    for (long v : elems_.at(i).free)
        if (v != 0) return false;
    return true;
}

std::vector<long> GList::coords(int i) const {
    std::vector<long> c = elems_.at(i).free;
    c.insert(c.end(), elems_[i].tors.begin(), elems_[i].tors.end());
    return c;
}

RatVec GList::free_vector(int i) const {
    RatVec v;
    for (long x : elems_.at(i).free) v.emplace_back(x);
    return v;
}

GList GList::sublist(const IndexSet& idx) const {
    std::vector<GElement> e;
    for (int i : idx) e.push_back(elems_.at(i));
    return GList(group_, std::move(e));
}

GList GList::deleted(int i) const {
    IndexSet idx;
    for (int j = 0; j < size(); ++j)
        if (j != i) idx.push_back(j);
    return sublist(idx);
}

IndexSet GList::all() const {
    IndexSet idx(size());
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

IntMatrix GList::rows() const {
    IntMatrix m(group_.coords(), std::vector<long>(size(), 0));
    for (int j = 0; j < size(); ++j) {
        auto c = coords(j);
        for (int i = 0; i < group_.coords(); ++i) m[i][j] = c[i];
    }
    return m;
}

std::string GList::str() const {
    std::ostringstream os;
    os << "[";
    auto m = rows();
    for (size_t i = 0; i < m.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
        os << "]";
    }
    os << "] over " << group_.str();
    return os.str();
}

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<long>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (size_t j = 0; j < m; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][l], b[l][j]));
    return c;
}

namespace {

void row_axpy(IntMatrix& m, size_t dst, size_t src, long f) {  // row dst -= f * row src
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_add(m[dst][j], -checked_mul(f, m[src][j]));
}

void col_axpy(IntMatrix& m, size_t dst, size_t src, long f) {  // col dst -= f * col src
    for (auto& row : m) row[dst] = checked_add(row[dst], -checked_mul(f, row[src]));
}

void col_swap(IntMatrix& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm snf(const IntMatrix& mat) {
    const size_t m = mat.size();
    const size_t n = m ? mat[0].size() : 0;
    SmithForm f{identity_matrix(static_cast<int>(m)), mat, identity_matrix(static_cast<int>(n))};
    IntMatrix& D = f.D;
    for (size_t t = 0; t < std::min(m, n); ++t) {
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (pi == m || std::labs(D[i][j]) < std::labs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        std::swap(D[t], D[pi]);
        std::swap(f.U[t], f.U[pi]);
        col_swap(D, t, pj);
        col_swap(f.V, t, pj);
        while (true) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                long q = D[i][t] / D[t][t];
                row_axpy(D, i, t, q);
                row_axpy(f.U, i, t, q);
                if (D[i][t] != 0) {
                    std::swap(D[i], D[t]);
                    std::swap(f.U[i], f.U[t]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                long q = D[t][j] / D[t][t];
                col_axpy(D, j, t, q);
                col_axpy(f.V, j, t, q);
                if (D[t][j] != 0) {
                    col_swap(D, j, t);
                    col_swap(f.V, j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            bool divisible = true;
            for (size_t i = t + 1; i < m && divisible; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        // pull row i into row t and reduce again
                        row_axpy(D, t, i, -1);
                        row_axpy(f.U, t, i, -1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (D[t][t] < 0) {
            for (auto& v : D[t]) v = -v;
            for (auto& v : f.U[t]) v = -v;
        }
    }
    return f;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    Matrix<Rational> m;
    for (const auto& row : u) {
        std::vector<Rational> r;
        for (long v : row) r.emplace_back(v);
        m.push_back(r);
    }
    auto inv = inverse_matrix(m);
    if (!inv) fail(ErrorKind::InternalError, "matrix is not invertible");
    IntMatrix out;
    for (const auto& row : *inv) {
        std::vector<long> r;
        for (const auto& v : row) {
            if (!is_integer(v)) fail(ErrorKind::InternalError, "matrix is not unimodular");
            r.push_back(v.get_num().get_si());
        }
        out.push_back(r);
    }
    return out;
}

namespace {

// Columns: coordinates of the selected elements, then the torsion relations.
IntMatrix relation_matrix(const GList& x, const IndexSet& s) {
    const FgGroup& g = x.group();
    const int rows = g.coords();
    IntMatrix m(rows, std::vector<long>(s.size() + g.torsion_count(), 0));
    for (size_t j = 0; j < s.size(); ++j) {
        auto c = x.coords(s[j]);
        for (int i = 0; i < rows; ++i) m[i][j] = c[i];
    }
    for (int k = 0; k < g.torsion_count(); ++k) m[g.free_rank + k][s.size() + k] = g.invariants[k];
    return m;
}

}  // namespace

long multiplicity(const GList& x, const IndexSet& s) {
    IntMatrix m = relation_matrix(x, s);
    if (m.empty() || m[0].empty()) return 1;
    SmithForm f = snf(m);
    long prod = 1;
    for (size_t i = 0; i < std::min(f.D.size(), f.D[0].size()); ++i)
        if (f.D[i][i] != 0) prod = checked_mul(prod, f.D[i][i]);
    return prod;
}

int rank_of(const GList& x, const IndexSet& s) {
    if (s.empty() || x.dim() == 0) return 0;
    Matrix<Rational> m;
    for (int i : s) m.push_back(x.free_vector(i));
    return matrix_rank(m, x.dim());
}

bool is_coloop(const GList& x, int i) {
    IndexSet rest;
    for (int j = 0; j < x.size(); ++j)
        if (j != i) rest.push_back(j);
    return rank_of(x, rest) == rank_of(x, x.all()) - 1;
}

GElement Contraction::image(const GElement& g) const {
    std::vector<long> c = g.free;
    c.insert(c.end(), g.tors.begin(), g.tors.end());
    const FgGroup& ng = list.group();
    GElement out;
    for (size_t r = 0; r < proj.size(); ++r) {
        long v = 0;
        for (size_t k = 0; k < c.size(); ++k) v = checked_add(v, checked_mul(proj[r][k], c[k]));
        if (static_cast<int>(r) < ng.free_rank)
            out.free.push_back(v);
        else
            out.tors.push_back(mod_floor(v, ng.invariants[r - ng.free_rank]));
    }
    return out;
}

Contraction contract(const GList& x, int i) {
    const FgGroup& g = x.group();
    IntMatrix rel = relation_matrix(x, {i});
    SmithForm f = snf(rel);
    const int n = g.coords();
    const int cols = static_cast<int>(rel[0].size());
    std::vector<int> free_rows, tors_rows;
    std::vector<long> invariants;
    for (int r = 0; r < n; ++r) {
        long dval = r < cols ? f.D[r][r] : 0;
        if (dval == 0)
            free_rows.push_back(r);
        else if (dval > 1) {
            tors_rows.push_back(r);
            invariants.push_back(dval);
        }
    }
    IntMatrix uinv_t;
    {
        IntMatrix uinv = unimodular_inverse(f.U);
        uinv_t.assign(n, std::vector<long>(n, 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) uinv_t[a][b] = uinv[b][a];
    }
    Contraction out;
    for (int r : free_rows) {
        out.proj.push_back(f.U[r]);
        out.char_down.push_back(uinv_t[r]);
    }
    for (int r : tors_rows) {
        out.proj.push_back(f.U[r]);
        out.char_down.push_back(uinv_t[r]);
    }
    FgGroup ng{static_cast<int>(free_rows.size()), invariants};
    out.list = GList(ng, {});
    std::vector<GElement> elems;
    for (int j = 0; j < x.size(); ++j) {
        if (j == i) continue;
        out.kept.push_back(j);
    }
    // build images once the target group is known
    Contraction tmp = out;
    for (int j : out.kept) elems.push_back(tmp.image(x[j]));
    out.list = GList(ng, std::move(elems));
    return out;
}

std::vector<long> primitive(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::labs(x));
    if (g == 0) return v;
    std::vector<long> out;
    for (long x : v) out.push_back(x / g);
    return out;
}

IntMatrix lattice_kernel(const std::vector<long>& eta) {
    SmithForm f = snf({eta});
    IntMatrix out;
    for (size_t j = 1; j < eta.size(); ++j) {
        std::vector<long> col;
        for (size_t i = 0; i < eta.size(); ++i) col.push_back(f.V[i][j]);
        out.push_back(col);
    }
    return out;
}

IntMatrix complete_unimodular(const std::vector<long>& eta) {
    SmithForm f = snf({eta});
    if (f.D[0][0] != 1) fail(ErrorKind::InvalidArgument, "vector is not primitive");
    IntMatrix a = unimodular_inverse(f.V);
    // eta * V = U^{-1} e_1, so the first row of V^{-1} is +-eta
    if (a[0] != eta)
        for (auto& v : a[0]) v = -v;
    if (a[0] != eta) fail(ErrorKind::InternalError, "unimodular completion failed");
    return a;
}

}  // namespace zonotopal
