#include "zonotopal/polyspace.hpp"

#include <algorithm>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

std::vector<int> GradedSpan::hilbert() const {
    std::vector<int> h;
    for (const auto& p : basis) {
        if (!p.is_homogeneous()) fail(ErrorKind::InvalidArgument, "span is not homogeneous");
        int k = std::max(p.degree(), 0);
        if (static_cast<int>(h.size()) <= k) h.resize(k + 1, 0);
        ++h[k];
    }
    return h;
}

MPoly linear_form(const GList& x, int i) {
    return MPoly::linear(VarKind::S, x.dim() + 1, 1, x.free_vector(i));
}

MPoly p_product(const GList& x, const IndexSet& y) {
    MPoly p = MPoly::constant(VarKind::S, x.dim() + 1, Cyclotomic(1));
    for (int i : y) p = p * linear_form(x, i);
    return p;
}

IndexSet rank_zero_elements(const GList& x) {
    IndexSet out;
    for (int i = 0; i < x.size(); ++i)
        if (x.is_torsion(i)) out.push_back(i);
    return out;
}

GradedSpan p_basis(const GList& x) {
    GradedSpan s;
    s.kind = VarKind::S;
    s.nvars = x.dim() + 1;
    const IndexSet zero = rank_zero_elements(x);
    for (const auto& b : bases(x)) {
        IndexSet drop = set_union(set_union(b, external_activity(x, b)), zero);
        s.basis.push_back(p_product(x, set_difference(x.all(), drop)));
    }
    return s;
}

std::vector<MPoly> cocircuit_gens(const GList& x, int degree) {
    std::vector<MPoly> out;
    const int nv = x.dim() + 1;
    for (const auto& c : cocircuits(x)) {
        int rest = degree - static_cast<int>(c.size());
        if (rest < 0) continue;
        MPoly pc = p_product(x, c);
        for (const auto& e : monomials_of_degree(nv, 1, rest)) out.push_back(pc * MPoly::monomial(VarKind::S, nv, e));
    }
    return out;
}

std::vector<Cyclotomic> coeff_vector(const MPoly& p, const std::vector<Exponent>& monos) {
    std::vector<Cyclotomic> v(monos.size());
    size_t found = 0;
    for (size_t i = 0; i < monos.size(); ++i) {
        auto it = p.terms().find(monos[i]);
        if (it != p.terms().end()) {
            v[i] = it->second;
            ++found;
        }
    }
    if (found != p.terms().size()) fail(ErrorKind::InternalError, "polynomial has terms outside the monomial list");
    return v;
}

std::vector<Rational> rational_coeff_vector(const MPoly& p, const std::vector<Exponent>& monos) {
    std::vector<Rational> out;
    for (const auto& c : coeff_vector(p, monos)) out.push_back(c.to_rational());
    return out;
}

MPoly from_coeff_vector(VarKind kind, int nvars, const std::vector<Exponent>& monos,
                        const std::vector<Cyclotomic>& v) {
    MPoly p(kind, nvars);
    for (size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], v[i]);
    return p;
}

namespace {

std::vector<Exponent> support_of(const std::vector<MPoly>& polys) {
    std::set<Exponent> s;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) s.insert(e);
    return {s.begin(), s.end()};
}

Matrix<Cyclotomic> coefficient_rows(const std::vector<MPoly>& polys, const std::vector<Exponent>& monos) {
    Matrix<Cyclotomic> m;
    for (const auto& p : polys) m.push_back(coeff_vector(p, monos));
    return m;
}

// Basis (as rational coefficient rows) of the intersection of two row spaces.
std::vector<std::vector<Rational>> intersect_rows(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<std::vector<Rational>>& b, int ncols) {
    if (a.empty() || b.empty()) return {};
    // Solve sum alpha_i a_i - sum beta_j b_j = 0.
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    Matrix<Rational> m(ncols, std::vector<Rational>(na + nb));
    for (int c = 0; c < ncols; ++c) {
        for (int i = 0; i < na; ++i) m[c][i] = a[i][c];
        for (int j = 0; j < nb; ++j) m[c][na + j] = -b[j][c];
    }
    std::vector<std::vector<Rational>> vecs;
    for (const auto& k : kernel_basis(m, na + nb)) {
        std::vector<Rational> v(ncols, Rational(0));
        for (int i = 0; i < na; ++i)
            if (k[i] != 0)
                for (int c = 0; c < ncols; ++c) v[c] += k[i] * a[i][c];
        vecs.push_back(v);
    }
    return rref(vecs, ncols).rows;
}

}  // namespace

int poly_rank(const std::vector<MPoly>& polys) {
    auto monos = support_of(polys);
    return matrix_rank(coefficient_rows(polys, monos), static_cast<int>(monos.size()));
}

bool in_span(const std::vector<MPoly>& polys, const MPoly& p) {
    std::vector<MPoly> all = polys;
    all.push_back(p);
    return poly_rank(all) == poly_rank(polys);
}

GradedSpan d_basis(const GList& x) {
    const int d = x.dim();
    const int top = x.size() - static_cast<int>(rank_zero_elements(x).size()) - d;
    auto cocs = cocircuits(x);
    bases(x);  // rank check
    GradedSpan s;
    s.kind = VarKind::T;
    s.nvars = d;
    std::vector<MPoly> ops;
    for (const auto& c : cocs) ops.push_back(p_product(x, c));
    for (int k = 0; k <= top; ++k) {
        auto monos = monomials_of_degree(d, 0, k);
        Matrix<Rational> rows;
        for (const auto& op : ops) {
            if (op.degree() > k) continue;
            auto target = monomials_of_degree(d, 0, k - op.degree());
            Matrix<Rational> block(target.size(), std::vector<Rational>(monos.size()));
            for (size_t j = 0; j < monos.size(); ++j) {
                MPoly img = apply_operator(op, MPoly::monomial(VarKind::T, d, monos[j]));
                auto v = rational_coeff_vector(img, target);
                for (size_t i = 0; i < target.size(); ++i) block[i][j] = v[i];
            }
            rows.insert(rows.end(), block.begin(), block.end());
        }
        Matrix<Rational> ker;
        if (rows.empty()) {
            for (size_t j = 0; j < monos.size(); ++j) {
                std::vector<Rational> e(monos.size(), Rational(0));
                e[j] = 1;
                ker.push_back(e);
            }
        } else {
            ker = kernel_basis(rows, static_cast<int>(monos.size()));
        }
        for (const auto& v : ker) {
            std::vector<Cyclotomic> cv(v.begin(), v.end());
            s.basis.push_back(from_coeff_vector(VarKind::T, d, monos, cv));
        }
    }
    return s;
}

GradedSpan internal_p_basis(const GList& x) {
    const int d = x.dim();
    const int nv = d + 1;
    GradedSpan out;
    out.kind = VarKind::S;
    out.nvars = nv;
    bases(x);
    // A deletion that drops the rank contributes the zero space.
    for (int i = 0; i < x.size(); ++i)
        if (is_coloop(x, i)) return out;
    const int top = x.size() - static_cast<int>(rank_zero_elements(x).size()) - d;
    std::vector<GradedSpan> spans;
    for (int i = 0; i < x.size(); ++i) spans.push_back(p_basis(x.deleted(i)));
    if (x.size() == 0) spans.push_back(p_basis(x));
    for (int k = 0; k <= top; ++k) {
        auto monos = monomials_of_degree(nv, 1, k);
        const int nc = static_cast<int>(monos.size());
        std::vector<std::vector<Rational>> cur;
        bool first = true;
        for (const auto& sp : spans) {
            std::vector<std::vector<Rational>> rows;
            for (const auto& p : sp.basis)
                if (p.degree() == k) rows.push_back(rational_coeff_vector(p, monos));
            cur = first ? rref(rows, nc).rows : intersect_rows(cur, rows, nc);
            first = false;
            if (cur.empty()) break;
        }
        for (const auto& r : cur) {
            std::vector<Cyclotomic> cv(r.begin(), r.end());
            out.basis.push_back(from_coeff_vector(VarKind::S, nv, monos, cv));
        }
    }
    return out;
}

Cyclotomic pair(const MPoly& p, const MPoly& f) {
    MPoly r = apply_operator(p, f);
    return r.coeff(Exponent(f.nvars(), 0));
}

PsiProjector::PsiProjector(const GList& x) : nvars_(x.dim() + 1) {
    top_ = x.size() - static_cast<int>(rank_zero_elements(x).size()) - x.dim();
    GradedSpan pb = p_basis(x);
    for (int k = 0; k <= top_; ++k) {
        auto monos = monomials_of_degree(nvars_, 1, k);
        const int m = static_cast<int>(monos.size());
        std::vector<std::vector<Rational>> cols;
        for (const auto& p : pb.basis)
            if (p.degree() == k) cols.push_back(rational_coeff_vector(p, monos));
        const int a = static_cast<int>(cols.size());
        for (const auto& j : cocircuit_gens(x, k)) {
            if (static_cast<int>(cols.size()) == m) break;
            auto v = rational_coeff_vector(j, monos);
            cols.push_back(v);
            if (matrix_rank(cols, m) < static_cast<int>(cols.size())) cols.pop_back();
        }
        if (static_cast<int>(cols.size()) != m)
            fail(ErrorKind::InternalError, "P and J do not span degree " + std::to_string(k));
        Matrix<Rational> c(m, std::vector<Rational>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c[i][j] = cols[j][i];
        auto inv = inverse_matrix(c);
        if (!inv) fail(ErrorKind::InternalError, "P and J are not complementary in degree " + std::to_string(k));
        // proj = Cp * inv[0..a)
        Matrix<Rational> pr(m, std::vector<Rational>(m, Rational(0)));
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < a; ++l) {
                if (cols[l][i] == 0) continue;
                for (int j = 0; j < m; ++j) pr[i][j] += cols[l][i] * (*inv)[l][j];
            }
        monos_.push_back(monos);
        proj_.push_back(pr);
    }
}

MPoly PsiProjector::project(const MPoly& f) const {
    MPoly out(VarKind::S, nvars_);
    for (const auto& [e, c] : f.terms())
        if (e[0] != 0) fail(ErrorKind::InvalidArgument, "projection does not act on s0");
    for (int k = 0; k <= top_ && k <= f.degree(); ++k) {
        MPoly fk = f.homogeneous_part(k);
        if (fk.is_zero()) continue;
        auto v = coeff_vector(fk, monos_[k]);
        const auto& pr = proj_[k];
        for (size_t i = 0; i < v.size(); ++i) {
            Cyclotomic acc;
            for (size_t j = 0; j < v.size(); ++j)
                if (pr[i][j] != 0 && !v[j].is_zero()) acc += v[j] * Cyclotomic(pr[i][j]);
            if (!acc.is_zero()) out.add_term(monos_[k][i], acc);
        }
    }
    return out;
}

MPoly psi_project(const GList& x, const TruncatedSeries& f) {
    PsiProjector p(x);
    if (f.cap() < p.top_degree()) fail(ErrorKind::InvalidArgument, "series cap below N - d");
    return p.project(f.body());
}

}  // namespace zonotopal
