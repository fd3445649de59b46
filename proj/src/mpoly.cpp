#include "zonotopal/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MPoly MPoly::constant(VarKind kind, int nvars, const Cyclotomic& c) {
    MPoly p(kind, nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(VarKind kind, int nvars, int index) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(kind, nvars, e);
}

MPoly MPoly::monomial(VarKind kind, int nvars, Exponent e, const Cyclotomic& c) {
    if (static_cast<int>(e.size()) != nvars) fail(ErrorKind::InvalidArgument, "exponent length mismatch");
    MPoly p(kind, nvars);
    p.add_term(e, c);
    return p;
}

MPoly MPoly::linear(VarKind kind, int nvars, int offset, const std::vector<Rational>& coeffs) {
    MPoly p(kind, nvars);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        Exponent e(nvars, 0);
        e.at(offset + j) = 1;
        p.add_term(e, Cyclotomic(coeffs[j]));
    }
    return p;
}

void MPoly::add_term(const Exponent& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Cyclotomic MPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
}

int MPoly::min_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = total(e);
        if (d < 0 || t < d) d = t;
    }
    return d;
}

bool MPoly::is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

MPoly MPoly::homogeneous_part(int k) const {
    MPoly out(kind_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total(e) == k) out.terms_.emplace(e, c);
    return out;
}

MPoly MPoly::truncated(int cap) const {
    MPoly out(kind_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total(e) <= cap) out.terms_.emplace(e, c);
    return out;
}

MPoly MPoly::derivative(int var) const {
    MPoly out(kind_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        f[var] -= 1;
        out.add_term(f, c * Cyclotomic(static_cast<long>(e[var])));
    }
    return out;
}

MPoly MPoly::pow(int k) const {
    MPoly out = constant(kind_, nvars_, Cyclotomic(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) fail(ErrorKind::InvalidArgument, "substitution arity mismatch");
    if (images.empty()) return *this;
    const MPoly& ref = images.front();
    MPoly out(ref.kind(), ref.nvars());
    std::vector<std::vector<MPoly>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
        MPoly term = constant(ref.kind(), ref.nvars(), c);
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            auto& pw = powers[j];
            if (pw.empty()) pw.push_back(constant(ref.kind(), ref.nvars(), Cyclotomic(1)));
            while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * images[j]);
            term = term * pw[e[j]];
        }
        out += term;
    }
    return out;
}

Cyclotomic MPoly::evaluate(const std::vector<Rational>& point) const {
    std::vector<Cyclotomic> p(point.begin(), point.end());
    return evaluate(p);
}

Cyclotomic MPoly::evaluate(const std::vector<Cyclotomic>& point) const {
    if (static_cast<int>(point.size()) != nvars_) fail(ErrorKind::InvalidArgument, "evaluation arity mismatch");
    Cyclotomic sum(0);
    for (const auto& [e, c] : terms_) {
        Cyclotomic t = c;
        for (int j = 0; j < nvars_; ++j)
            for (int k = 0; k < e[j]; ++k) t *= point[j];
        sum += t;
    }
    return sum;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

void MPoly::check_compatible(const MPoly& o) const {
    if (o.kind_ != kind_ || o.nvars_ != nvars_)
        fail(ErrorKind::InvalidArgument, "polynomials over different variable sets");
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty() && nvars_ == 0 && o.nvars_ != 0) {
        *this = o;
        return *this;
    }
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Cyclotomic& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.kind_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea;
            for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (a.nvars_ != b.nvars_ || a.kind_ != b.kind_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::string MPoly::var_name(int i) const {
    if (kind_ == VarKind::S) return "s" + std::to_string(i);
    return "t" + std::to_string(i + 1);
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Cyclotomic>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        int dx = total(x.first), dy = total(y.first);
        if (dx != dy) return dx < dy;
        return x.first > y.first;
    });
    std::string out;
    for (const auto& [e, c] : items) {
        std::string mono;
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(j);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        bool negative = false;
        std::string coef;
        if (c.is_rational()) {
            Rational q = c.to_rational();
            negative = sgn(q) < 0;
            Rational m = abs(q);
            if (m != 1 || mono.empty()) coef = to_string(m);
        } else {
            coef = "(" + c.str() + ")";
        }
        std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

MPoly multiply_truncated(const MPoly& a, const MPoly& b, int cap) {
    if (a.kind() != b.kind() || a.nvars() != b.nvars())
        fail(ErrorKind::InvalidArgument, "polynomials over different variable sets");
    MPoly out(a.kind(), a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        int da = total(ea);
        if (da > cap) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total(eb) > cap) continue;
            Exponent e = ea;
            for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
    MPoly rem = a;
    MPoly q(a.kind(), a.nvars());
    const auto& [lb_exp, lb_coef] = *b.terms().rbegin();
    const Cyclotomic lb_inv = lb_coef.inverse();
    while (!rem.is_zero()) {
        const auto& [le, lc] = *rem.terms().rbegin();
        Exponent e = le;
        for (size_t j = 0; j < e.size(); ++j) {
            e[j] -= lb_exp[j];
            if (e[j] < 0) fail(ErrorKind::NonMember, "polynomial is not divisible by " + b.str());
        }
        MPoly t = MPoly::monomial(a.kind(), a.nvars(), e, lc * lb_inv);
        q += t;
        rem -= t * b;
    }
    return q;
}

std::vector<Exponent> monomials_of_degree(int nvars, int first, int k) {
    std::vector<Exponent> out;
    Exponent e(nvars, 0);
    // recursive fill of slots first..nvars-1
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == nvars - 1) {
            e[slot] = left;
            out.push_back(e);
            e[slot] = 0;
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[slot] = v;
            self(self, slot + 1, left - v);
        }
        e[slot] = 0;
    };
    if (first >= nvars) {
        if (k == 0) out.push_back(e);
        return out;
    }
    rec(rec, first, k);
    return out;
}

MPoly apply_operator(const MPoly& p, const MPoly& f) {
    if (p.kind() != VarKind::S || f.kind() != VarKind::T || p.nvars() != f.nvars() + 1)
        fail(ErrorKind::InvalidArgument, "apply_operator expects an S operator and a T function of matching dimension");
    const int d = f.nvars();
    MPoly out(VarKind::T, d);
    for (const auto& [ea, ca] : p.terms()) {
        if (ea[0] != 0) fail(ErrorKind::InvalidArgument, "s0 cannot act as a differential operator");
        for (const auto& [eb, cb] : f.terms()) {
            Exponent e = eb;
            Integer factor = 1;
            bool ok = true;
            for (int j = 0; j < d; ++j) {
                int a = ea[j + 1];
                if (eb[j] < a) { ok = false; break; }
                for (int k = 0; k < a; ++k) factor *= (eb[j] - k);
                e[j] -= a;
            }
            if (ok) out.add_term(e, ca * cb * Cyclotomic(Rational(factor)));
        }
    }
    return out;
}

}  // namespace zonotopal
