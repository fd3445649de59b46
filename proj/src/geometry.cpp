#include "zonotopal/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

RatVec to_rational(const LatticePoint& p) {
    RatVec v;
    for (long x : p) v.emplace_back(x);
    return v;
}

namespace {

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const std::vector<long>& a, const RatVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

void require_lattice(const GList& x) {
    if (!x.is_lattice()) fail(ErrorKind::TorsionUnsupported, "spline evaluation requires a lattice");
}

void require_full_rank(const GList& x) {
    if (rank_of(x, x.all()) != x.dim()) fail(ErrorKind::RankDeficient, "list does not span");
}

// Finds y with a_i . y >= c_i for all rows by Fourier-Motzkin elimination.
std::optional<RatVec> fm_solve(const RatMat& a, const RatVec& c, int n) {
    if (n == 0) {
        for (const auto& ci : c)
            if (ci > 0) return std::nullopt;
        return RatVec{};
    }
    const int last = n - 1;
    RatMat lo_a, up_a, keep_a;
    RatVec lo_c, up_c, keep_c;
    for (size_t i = 0; i < a.size(); ++i) {
        const Rational& k = a[i][last];
        if (k == 0) {
            keep_a.push_back(RatVec(a[i].begin(), a[i].begin() + last));
            keep_c.push_back(c[i]);
            continue;
        }
        RatVec row(last);
        Rational mag = abs(k);
        for (int j = 0; j < last; ++j) row[j] = a[i][j] / mag;
        if (k > 0) {
            lo_a.push_back(row);  // y_last >= c/|k| - row . y'
            lo_c.push_back(c[i] / mag);
        } else {
            up_a.push_back(row);  // y_last <= row . y' - c/|k|
            up_c.push_back(c[i] / mag);
        }
    }
    RatMat na = keep_a;
    RatVec nc = keep_c;
    for (size_t l = 0; l < lo_a.size(); ++l)
        for (size_t u = 0; u < up_a.size(); ++u) {
            RatVec row(last);
            for (int j = 0; j < last; ++j) row[j] = lo_a[l][j] + up_a[u][j];
            na.push_back(row);
            nc.push_back(lo_c[l] + up_c[u]);
        }
    // drop duplicate rows to keep the system small
    std::set<std::pair<RatVec, Rational>> uniq;
    RatMat da;
    RatVec dc;
    for (size_t i = 0; i < na.size(); ++i)
        if (uniq.insert({na[i], nc[i]}).second) {
            da.push_back(na[i]);
            dc.push_back(nc[i]);
        }
    auto sub = fm_solve(da, dc, last);
    if (!sub) return std::nullopt;
    std::optional<Rational> lo, up;
    for (size_t l = 0; l < lo_a.size(); ++l) {
        Rational v = lo_c[l] - dot(lo_a[l], *sub);
        if (!lo || v > *lo) lo = v;
    }
    for (size_t u = 0; u < up_a.size(); ++u) {
        Rational v = dot(up_a[u], *sub) - up_c[u];
        if (!up || v < *up) up = v;
    }
    Rational val = 0;
    if (lo && up)
        val = (*lo + *up) / 2;
    else if (lo)
        val = *lo;
    else if (up)
        val = *up;
    RatVec y = *sub;
    y.push_back(val);
    return y;
}

}  // namespace

bool HPolytope::contains(const RatVec& y, bool strict) const {
    for (size_t i = 0; i < A.size(); ++i) {
        Rational v = dot(A[i], y);
        if (strict ? !(v < b[i]) : v > b[i]) return false;
    }
    return true;
}

std::optional<std::vector<long>> pointed_functional(const GList& x) {
    const int d = x.dim();
    RatMat a;
    RatVec c;
    for (int i = 0; i < x.size(); ++i) {
        if (x.is_torsion(i)) {
            if (x.is_lattice()) return std::nullopt;  // a zero vector
            continue;
        }
        a.push_back(x.free_vector(i));
        c.emplace_back(1);
    }
    auto y = fm_solve(a, c, d);
    if (!y) return std::nullopt;
    Integer l = 1;
    for (const auto& v : *y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<long> eta;
    for (const auto& v : *y) {
        Rational s = v * Rational(l);
        eta.push_back(s.get_num().get_si());
    }
    for (int i = 0; i < x.size(); ++i)
        if (!x.is_torsion(i) && dot(eta, x[i].free) < 1) fail(ErrorKind::InternalError, "pointedness witness fails");
    return eta;
}

bool is_pointed(const GList& x) { return pointed_functional(x).has_value(); }

bool in_cone(const GList& x, const RatVec& u) {
    for (const auto& eta : hyperplane_normals(x)) {
        int lo = 0, hi = 0;
        for (int i = 0; i < x.size(); ++i) {
            long v = dot(eta, x[i].free);
            if (v > 0) ++hi;
            if (v < 0) ++lo;
        }
        Rational s = dot(eta, u);
        if (lo == 0 && s < 0) return false;
        if (hi == 0 && s > 0) return false;
    }
    return true;
}

std::vector<std::vector<long>> hyperplane_normals(const GList& x) {
    const int d = x.dim();
    std::set<std::vector<long>> out;
    for (const auto& f : hyperplane_flats(x)) {
        RatMat m;
        for (int i : f)
            if (!x.is_torsion(i)) m.push_back(x.free_vector(i));
        auto ker = kernel_basis(m, d);
        if (ker.size() != 1) fail(ErrorKind::InternalError, "flat normal is not unique");
        Integer l = 1;
        for (const auto& v : ker[0]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<long> eta;
        for (const auto& v : ker[0]) eta.push_back(Rational(v * Rational(l)).get_num().get_si());
        eta = primitive(eta);
        for (long v : eta)
            if (v != 0) {
                if (v < 0)
                    for (auto& e : eta) e = -e;
                break;
            }
        out.insert(eta);
    }
    return {out.begin(), out.end()};
}

HPolytope zonotope_hrep(const GList& x) {
    require_full_rank(x);
    HPolytope p;
    for (const auto& eta : hyperplane_normals(x)) {
        long hi = 0, lo = 0;
        for (int i = 0; i < x.size(); ++i) {
            long v = dot(eta, x[i].free);
            if (v > 0) hi += v;
            if (v < 0) lo += v;
        }
        RatVec e, ne;
        for (long v : eta) {
            e.emplace_back(v);
            ne.emplace_back(-v);
        }
        p.A.push_back(e);
        p.b.emplace_back(hi);
        p.A.push_back(ne);
        p.b.emplace_back(-lo);
    }
    return p;
}

std::vector<LatticePoint> lattice_points(const GList& x, LatticeMode mode, const RatVec& w) {
    HPolytope z = zonotope_hrep(x);
    const int d = x.dim();
    RatVec shift = (mode == LatticeMode::Shifted) ? w : RatVec(d, Rational(0));
    if (static_cast<int>(shift.size()) != d) fail(ErrorKind::InvalidArgument, "shift has the wrong length");
    if (mode == LatticeMode::Shifted && !is_short_regular(x, w))
        fail(ErrorKind::InvalidArgument, "shift is not affine regular");
    std::vector<long> lo(d, 0), hi(d, 0);
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < d; ++j) (x[i].free[j] > 0 ? hi[j] : lo[j]) += x[i].free[j];
    for (int j = 0; j < d; ++j) {
        long pad = floor_of(abs(shift[j])).get_si() + 1;
        lo[j] -= pad;
        hi[j] += pad;
    }
    std::vector<LatticePoint> out;
    LatticePoint p(lo);
    if (d == 0) return {LatticePoint{}};
    while (true) {
        RatVec q = to_rational(p);
        for (int j = 0; j < d; ++j) q[j] += shift[j];
        if (z.contains(q, mode == LatticeMode::Interior)) out.push_back(p);
        int k = 0;
        while (k < d && ++p[k] > hi[k]) {
            p[k] = lo[k];
            ++k;
        }
        if (k == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class Lasserre {
public:
    Lasserre(const RatMat& a, const RatVec& b, int n) : a_(a), b_(b), n_(n) {}

    Rational volume(const IndexSet& tight) {
        auto it = memo_.find(tight);
        if (it != memo_.end()) return it->second;
        Rational v = compute(tight);
        memo_.emplace(tight, v);
        return v;
    }

private:
    Rational compute(const IndexSet& tight) {
        Matrix<Rational> eq;
        for (int r : tight) {
            RatVec row = a_[r];
            row.push_back(b_[r]);
            eq.push_back(row);
        }
        Echelon<Rational> e = rref(eq, n_ + 1);
        for (int p : e.pivots)
            if (p == n_) return 0;
        const int dim = n_ - static_cast<int>(e.pivots.size());
        std::vector<bool> pivot(n_, false);
        for (int p : e.pivots) pivot[p] = true;
        std::vector<int> free_cols;
        for (int j = 0; j < n_; ++j)
            if (!pivot[j]) free_cols.push_back(j);
        struct Reduced {
            int index;
            RatVec a;
            Rational b;
        };
        std::vector<Reduced> rows;
        std::set<std::pair<RatVec, Rational>> seen;
        for (int r = 0; r < static_cast<int>(a_.size()); ++r) {
            if (std::binary_search(tight.begin(), tight.end(), r)) continue;
            RatVec ar(free_cols.size());
            Rational br = b_[r];
            for (size_t k = 0; k < e.pivots.size(); ++k) {
                const Rational& c = a_[r][e.pivots[k]];
                if (c == 0) continue;
                br -= c * e.rows[k][n_];
            }
            bool zero = true;
            for (size_t f = 0; f < free_cols.size(); ++f) {
                Rational v = a_[r][free_cols[f]];
                for (size_t k = 0; k < e.pivots.size(); ++k) {
                    const Rational& c = a_[r][e.pivots[k]];
                    if (c != 0) v -= c * e.rows[k][free_cols[f]];
                }
                ar[f] = v;
                if (v != 0) zero = false;
            }
            if (zero) {
                if (br < 0) return 0;
                continue;
            }
            Rational lead;
            for (const auto& v : ar)
                if (v != 0) {
                    lead = abs(v);
                    break;
                }
            RatVec key = ar;
            for (auto& v : key) v /= lead;
            if (!seen.insert({key, br / lead}).second) continue;
            rows.push_back({r, ar, br});
        }
        if (dim == 0) return 1;
        Rational sum = 0;
        for (const auto& row : rows) {
            if (row.b == 0) continue;
            Rational lead;
            for (const auto& v : row.a)
                if (v != 0) {
                    lead = abs(v);
                    break;
                }
            IndexSet next = tight;
            next.insert(std::upper_bound(next.begin(), next.end(), row.index), row.index);
            Rational face = volume(next);
            if (face != 0) sum += row.b / lead * face;
        }
        return sum / dim;
    }

    const RatMat& a_;
    const RatVec& b_;
    int n_;
    std::map<IndexSet, Rational> memo_;
};

}  // namespace

Rational polytope_volume(const RatMat& a, const RatVec& b, int n) {
    Lasserre l(a, b, n);
    return l.volume({});
}

SplineEvaluator::SplineEvaluator(const GList& x) : x_(x) {
    require_lattice(x);
    require_full_rank(x);
    if (!is_pointed(x)) fail(ErrorKind::NotPointed, "0 lies in the convex hull of the list");
    const int d = x.dim(), n = x.size();
    RatMat xm(d, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) xm[j][i] = x[i].free[j];
    RatMat ker = kernel_basis(xm, n);  // rows are kernel vectors
    const int k = static_cast<int>(ker.size());
    kernel_.assign(n, RatVec(k));
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i) kernel_[i][c] = ker[c][i];
    basis_ = bases(x).front();
    RatMat bm(d, RatVec(d));
    for (int c = 0; c < d; ++c)
        for (int j = 0; j < d; ++j) bm[j][c] = x[basis_[c]].free[j];
    basis_inverse_ = *inverse_matrix(bm);
    // det(K^T K) / |det[K | X^T]|
    RatMat ktk(k, RatVec(k, Rational(0)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int i = 0; i < n; ++i) ktk[a][b] += kernel_[i][a] * kernel_[i][b];
    RatMat full(n, RatVec(n));
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < k; ++c) full[i][c] = kernel_[i][c];
        for (int j = 0; j < d; ++j) full[i][k + j] = xm[j][i];
    }
    Rational num = k ? determinant(ktk) : Rational(1);
    scale_ = num / abs(determinant(full));
}

RatVec SplineEvaluator::particular(const RatVec& u) const {
    const int d = x_.dim();
    RatVec w0(x_.size(), Rational(0));
    for (int c = 0; c < d; ++c) {
        Rational s = 0;
        for (int j = 0; j < d; ++j) s += basis_inverse_[c][j] * u.at(j);
        w0[basis_[c]] = s;
    }
    return w0;
}

Rational SplineEvaluator::tx(const RatVec& u) const {
    RatVec w0 = particular(u);
    const int k = static_cast<int>(kernel_.empty() ? 0 : kernel_[0].size());
    RatMat a;
    RatVec b;
    for (int i = 0; i < x_.size(); ++i) {  // -K t <= w0
        RatVec row(k);
        for (int c = 0; c < k; ++c) row[c] = -kernel_[i][c];
        a.push_back(row);
        b.push_back(w0[i]);
    }
    return polytope_volume(a, b, k) * scale_;
}

Rational SplineEvaluator::bx(const RatVec& u) const {
    RatVec w0 = particular(u);
    const int k = static_cast<int>(kernel_.empty() ? 0 : kernel_[0].size());
    RatMat a;
    RatVec b;
    for (int i = 0; i < x_.size(); ++i) {  // 0 <= K t + w0 <= 1
        RatVec row(k), neg(k);
        for (int c = 0; c < k; ++c) {
            row[c] = -kernel_[i][c];
            neg[c] = kernel_[i][c];
        }
        a.push_back(row);
        b.push_back(w0[i]);
        a.push_back(neg);
        b.push_back(1 - w0[i]);
    }
    return polytope_volume(a, b, k) * scale_;
}

Rational tx_value(const GList& x, const RatVec& u) { return SplineEvaluator(x).tx(u); }
Rational bx_value(const GList& x, const RatVec& u) { return SplineEvaluator(x).bx(u); }

VpfCounter::VpfCounter(const GList& x) : x_(x) {
    require_lattice(x);
    auto eta = pointed_functional(x);
    if (!eta) fail(ErrorKind::NotPointed, "0 lies in the convex hull of the list");
    eta_ = *eta;
}

Integer VpfCounter::count(const LatticePoint& u) {
    if (static_cast<int>(u.size()) != x_.dim()) fail(ErrorKind::InvalidArgument, "point has the wrong length");
    return rec(0, u);
}

Integer VpfCounter::rec(int i, const LatticePoint& u) {
    if (i == x_.size()) {
        for (long v : u)
            if (v != 0) return 0;
        return 1;
    }
    long level = dot(eta_, u);
    if (level < 0) return 0;
    auto key = std::make_pair(i, u);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto& xi = x_[i].free;
    long step = dot(eta_, xi);
    Integer total = 0;
    LatticePoint v = u;
    for (long k = 0; k * step <= level; ++k) {
        total += rec(i + 1, v);
        for (size_t j = 0; j < v.size(); ++j) v[j] -= xi[j];
    }
    memo_.emplace(key, total);
    return total;
}

Integer vpf_count(const GList& x, const LatticePoint& u) {
    VpfCounter c(x);
    return c.count(u);
}

namespace {

Rational det2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

int lexsign(const Rational& first, const Rational& second) {
    if (first != 0) return sgn(first);
    return sgn(second);
}

}  // namespace

std::vector<Cell> big_cells(const GList& x) {
    require_full_rank(x);
    const int d = x.dim();
    auto eta = pointed_functional(x);
    if (!eta) fail(ErrorKind::NotPointed, "0 lies in the convex hull of the list");
    if (d >= 3) fail(ErrorKind::SamplesRequired, "chambers are enumerated only for d <= 2");
    if (d == 1) {
        RatVec dir{Rational(eta->at(0) > 0 ? 1 : -1)};
        return {Cell{dir, {dir}}};
    }
    std::set<std::vector<long>> uniq;
    for (int i = 0; i < x.size(); ++i)
        if (!x.is_torsion(i)) uniq.insert(primitive(x[i].free));
    std::vector<RatVec> rays;
    for (const auto& r : uniq) rays.push_back(to_rational(r));
    std::sort(rays.begin(), rays.end(), [](const RatVec& a, const RatVec& b) { return det2(a, b) > 0; });
    std::vector<Cell> cells;
    for (size_t k = 0; k + 1 < rays.size(); ++k) {
        RatVec s{rays[k][0] + rays[k + 1][0], rays[k][1] + rays[k + 1][1]};
        cells.push_back(Cell{s, {rays[k], rays[k + 1]}});
    }
    return cells;
}

int locate_cell(const GList& x, const std::vector<Cell>& cells, const RatVec& u, const RatVec& w) {
    const int d = x.dim();
    RatVec ww = w.empty() ? RatVec(d, Rational(0)) : w;
    for (size_t k = 0; k < cells.size(); ++k) {
        const Cell& c = cells[k];
        if (d == 1) {
            if (lexsign(c.rays[0][0] * u[0], c.rays[0][0] * ww[0]) > 0) return static_cast<int>(k);
            continue;
        }
        const RatVec& a = c.rays[0];
        const RatVec& b = c.rays[1];
        if (lexsign(det2(a, u), det2(a, ww)) > 0 && lexsign(det2(u, b), det2(ww, b)) > 0) return static_cast<int>(k);
    }
    return -1;
}

bool is_short_regular(const GList& x, const RatVec& w) {
    if (static_cast<int>(w.size()) != x.dim()) return false;
    for (const auto& eta : hyperplane_normals(x)) {
        Rational v = abs(dot(eta, w));
        if (v == 0 || v >= 1) return false;
    }
    return true;
}

RatVec short_regular(const GList& x) {
    require_full_rank(x);
    const int d = x.dim();
    auto normals = hyperplane_normals(x);
    for (long k = 0; k < 1000; ++k) {
        std::vector<long> v(d, 0);
        for (int i = 0; i < x.size(); ++i) {
            long c = 1 + (i * k) % 5 + (k > 4 ? i % 3 : 0);
            for (int j = 0; j < d; ++j) v[j] = checked_add(v[j], checked_mul(c, x[i].free[j]));
        }
        long worst = 0;
        bool ok = true;
        for (const auto& eta : normals) {
            long s = std::labs(dot(eta, v));
            if (s == 0) ok = false;
            worst = std::max(worst, s);
        }
        if (!ok || worst == 0) continue;
        RatVec w;
        for (long c : v) w.push_back(Rational(c) / (7 * worst));
        if (is_short_regular(x, w)) return w;
    }
    fail(ErrorKind::InternalError, "no short regular vector found");
}

namespace {

// Exponents of total degree <= n in d variables.
std::vector<Exponent> monomials_up_to(int d, int n) {
    std::vector<Exponent> out;
    for (int k = 0; k <= n; ++k)
        for (auto& e : monomials_of_degree(d, 0, k)) out.push_back(e);
    return out;
}

MPoly interpolate(int d, int n, const std::vector<RatVec>& pts, const std::vector<Rational>& vals) {
    auto monos = monomials_up_to(d, n);
    const int m = static_cast<int>(monos.size());
    Matrix<Rational> a;
    for (const auto& p : pts) {
        RatVec row;
        for (const auto& e : monos) {
            Rational v = 1;
            for (int j = 0; j < d; ++j)
                for (int r = 0; r < e[j]; ++r) v *= p[j];
            row.push_back(v);
        }
        a.push_back(row);
    }
    if (matrix_rank(a, m) < m) fail(ErrorKind::InterpolationSingular, "interpolation nodes are not unisolvent");
    auto sol = solve_linear(a, vals, m);
    if (!sol) fail(ErrorKind::InternalError, "inconsistent interpolation system");
    MPoly p(VarKind::T, d);
    for (int i = 0; i < m; ++i) p.add_term(monos[i], (*sol)[i]);
    return p;
}

// Offsets q in Z^d_{>=0} with |q| <= n.
std::vector<std::vector<long>> principal_lattice(int d, int n) {
    std::vector<std::vector<long>> out;
    for (const auto& e : monomials_up_to(d, n)) out.emplace_back(e.begin(), e.end());
    return out;
}

}  // namespace

MPoly local_piece(const SplineEvaluator& ev, const Cell& c) {
    const GList& x = ev.list();
    const int d = x.dim();
    const int n = x.size() - d;
    auto normals = hyperplane_normals(x);
    for (const auto& eta : normals)
        if (dot(eta, c.sample) == 0) fail(ErrorKind::DegenerateSample, "sample lies on a hyperplane");
    auto offsets = principal_lattice(d, n);
    Rational eps(1, 4 * (n + 1));
    std::vector<RatVec> pts;
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
        pts.clear();
        bool ok = true;
        for (const auto& q : offsets) {
            RatVec p = c.sample;
            for (int j = 0; j < d; ++j) p[j] += eps * q[j];
            for (const auto& eta : normals)
                if (sgn(dot(eta, p)) != sgn(dot(eta, c.sample))) ok = false;
            pts.push_back(p);
        }
        if (ok) break;
    }
    std::vector<Rational> vals;
    for (const auto& p : pts) vals.push_back(ev.tx(p));
    MPoly poly = interpolate(d, n, pts, vals);
    MPoly top = poly.homogeneous_part(n);
    if (poly != top) fail(ErrorKind::InternalError, "local piece is not homogeneous");
    return poly;
}

MPoly local_piece(const GList& x, const Cell& c) {
    SplineEvaluator ev(x);
    return local_piece(ev, c);
}

MPoly alcove_piece(const SplineEvaluator& ev, const RatVec& lambda, const RatVec& w, bool box) {
    const GList& x = ev.list();
    const int d = x.dim();
    const int n = x.size() - d;
    auto normals = hyperplane_normals(x);
    for (const auto& eta : normals)
        if (dot(eta, w) == 0) fail(ErrorKind::InvalidArgument, "direction is not regular");
    auto offsets = principal_lattice(d, n);
    // lambda + eps (w + delta q), all inside the alcove entered from lambda along w
    Rational delta(1, 8 * (n + 1));
    Rational eps(1, 2);
    std::vector<RatVec> pts;
    for (int attempt = 0; attempt < 64; ++attempt) {
        pts.clear();
        bool ok = true;
        for (const auto& q : offsets) {
            RatVec dir = w;
            for (int j = 0; j < d; ++j) dir[j] += delta * q[j];
            for (const auto& eta : normals) {
                Rational s = dot(eta, dir), t = dot(eta, w);
                if (sgn(s) != sgn(t) || abs(eps * s) >= 1) ok = false;
            }
            RatVec p = lambda;
            for (int j = 0; j < d; ++j) p[j] += eps * dir[j];
            pts.push_back(p);
        }
        if (ok) break;
        delta /= 2;
        eps /= 2;
    }
    for (const auto& eta : normals) {
        Rational base = dot(eta, lambda);
        if (!is_integer(base)) fail(ErrorKind::InvalidArgument, "alcove pieces are taken at lattice points");
    }
    std::vector<Rational> vals;
    for (const auto& p : pts) vals.push_back(box ? ev.bx(p) : ev.tx(p));
    return interpolate(d, n, pts, vals);
}

QuasiFunction quasi_fit(const GList& x, const Cell& c) {
    require_lattice(x);
    const int d = x.dim();
    auto dm = dm_basis(x);
    const int m = static_cast<int>(dm.size());
    VpfCounter counter(x);
    std::vector<Cell> single{c};
    RatVec zero(d, Rational(0));
    // lattice points inside the open cell, by growing radius
    std::vector<LatticePoint> pts;
    Matrix<Cyclotomic> rows;
    std::vector<Cyclotomic> rhs;
    std::vector<LatticePoint> extra;
    for (long radius = 1; radius <= 60 && static_cast<int>(extra.size()) < 6; ++radius) {
        std::vector<LatticePoint> shell;
        LatticePoint p(d, -radius);
        while (true) {
            long norm = 0;
            for (long v : p) norm = std::max(norm, std::labs(v));
            if (norm == radius && locate_cell(x, single, to_rational(p), zero) == 0) shell.push_back(p);
            int k = 0;
            while (k < d && ++p[k] > radius) {
                p[k] = -radius;
                ++k;
            }
            if (k == d) break;
        }
        for (const auto& p : shell) {
            std::vector<Cyclotomic> row;
            for (const auto& f : dm) row.push_back(f.evaluate(p));
            if (static_cast<int>(rows.size()) < m) {
                auto trial = rows;
                trial.push_back(row);
                if (matrix_rank(trial, m) == static_cast<int>(trial.size())) {
                    rows.push_back(row);
                    rhs.emplace_back(Rational(counter.count(p)));
                    pts.push_back(p);
                    continue;
                }
            }
            if (static_cast<int>(rows.size()) == m) extra.push_back(p);
        }
    }
    if (static_cast<int>(rows.size()) < m) fail(ErrorKind::InsufficientPoints, "not enough lattice points in the cell");
    auto sol = solve_linear(rows, rhs, m);
    if (!sol) fail(ErrorKind::InternalError, "inconsistent quasipolynomial fit");
    QuasiFunction q(d);
    for (int j = 0; j < m; ++j) {
        if ((*sol)[j].is_zero()) continue;
        for (const auto& [ch, f] : dm[j].terms()) q.add(ch, f * (*sol)[j]);
    }
    for (const auto& p : extra)
        if (q.evaluate(p) != Cyclotomic(Rational(counter.count(p))))
            fail(ErrorKind::InternalError, "quasipolynomial fit disagrees with the count");
    return q;
}

}  // namespace zonotopal
