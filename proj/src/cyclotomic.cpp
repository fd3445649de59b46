#include "zonotopal/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using IntPoly = std::vector<long>;  // low degree first

IntPoly divide_monic(IntPoly a, const IntPoly& b) {
    const size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;) {
        long c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

struct Table {
    long n = 1;
    long phi = 1;
    std::vector<std::vector<long>> pow;  // pow[j] = x^j mod Phi_n, 0 <= j < n
};

std::mutex table_mu;
std::map<long, IntPoly> poly_cache;
std::map<long, std::shared_ptr<const Table>> table_cache;

const IntPoly& cyclotomic_poly(long n) {
    auto it = poly_cache.find(n);
    if (it != poly_cache.end()) return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d));
    return poly_cache.emplace(n, p).first->second;
}

std::shared_ptr<const Table> table_for(long n) {
    std::lock_guard<std::mutex> lock(table_mu);
    auto it = table_cache.find(n);
    if (it != table_cache.end()) return it->second;
    auto t = std::make_shared<Table>();
    t->n = n;
    const IntPoly& phi_poly = cyclotomic_poly(n);
    t->phi = static_cast<long>(phi_poly.size()) - 1;
    std::vector<long> cur(t->phi, 0);
    cur[0] = 1;
    for (long j = 0; j < n; ++j) {
        t->pow.push_back(cur);
        // multiply by x and reduce with x^phi = -sum c_i x^i
        long top = cur[t->phi - 1];
        for (long i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < t->phi; ++i) cur[i] -= top * phi_poly[i];
    }
    table_cache.emplace(n, t);
    return t;
}

long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

void add_power(std::vector<Rational>& acc, const Table& t, long e, const Rational& c) {
    const auto& row = t.pow[mod_pos(e, t.n)];
    for (long i = 0; i < t.phi; ++i)
        if (row[i] != 0) acc[i] += c * row[i];
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n <= 0) fail(ErrorKind::InvalidArgument, "root of unity order must be positive");
    k = mod_pos(k, n);
    long g = std::gcd(n, k);
    if (k == 0) return Cyclotomic(1);
    n /= g;
    k /= g;
    if (n == 2) return Cyclotomic(-1);
    Rational sign = 1;
    if (n % 4 == 2) {
        long m = n / 2;
        if (k % 2) sign = -1;
        k = mod_pos(k * ((m + 1) / 2), m);
        n = m;
    }
    auto t = table_for(n);
    Cyclotomic out;
    out.order_ = n;
    out.c_.assign(t->phi, Rational(0));
    add_power(out.c_, *t, k, sign);
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::from_coeffs(long order, std::vector<Rational> coeffs) {
    if (order <= 0 || order % 4 == 2)
        fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive and not 2 mod 4");
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        fail(ErrorKind::InvalidArgument, "coefficient count must equal phi(order)");
    Cyclotomic out;
    out.order_ = order;
    out.c_ = std::move(coeffs);
    out.normalize();
    return out;
}

void Cyclotomic::normalize() {
    if (order_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return;
    c_.resize(1);
    order_ = 1;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (order_ != 1) fail(ErrorKind::InvalidArgument, "cyclotomic value " + str() + " is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(long n) const {
    if (n % order_ != 0) fail(ErrorKind::InternalError, "cannot lift cyclotomic to a non-multiple order");
    if (n == order_) return *this;
    auto t = table_for(n);
    const long step = n / order_;
    Cyclotomic out;
    out.order_ = n;
    out.c_.assign(t->phi, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) add_power(out.c_, *t, static_cast<long>(i) * step, c_[i]);
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order_ == 1) {
        c_[0] += o.c_[0];
        normalize();
        return *this;
    }
    long n = std::lcm(order_, o.order_);
    if (n != order_) *this = lifted(n);
    Cyclotomic b = o.lifted(n);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.order_ == 1) {
        const Rational f = o.c_[0];
        for (auto& c : c_) c *= f;
        normalize();
        return *this;
    }
    if (order_ == 1) {
        const Rational f = c_[0];
        *this = o;
        for (auto& c : c_) c *= f;
        normalize();
        return *this;
    }
    long n = std::lcm(order_, o.order_);
    Cyclotomic a = lifted(n);
    Cyclotomic b = o.lifted(n);
    auto t = table_for(n);
    const long phi = t->phi;
    std::vector<Rational> raw(2 * phi - 1, Rational(0));
    for (long i = 0; i < phi; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (long j = 0; j < phi; ++j)
            if (sgn(b.c_[j]) != 0) raw[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> acc(raw.begin(), raw.begin() + phi);
    for (long e = phi; e < 2 * phi - 1; ++e)
        if (sgn(raw[e]) != 0) add_power(acc, *t, e, raw[e]);
    order_ = n;
    c_ = std::move(acc);
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
    if (order_ == 1) return Cyclotomic(Rational(1) / c_[0]);
    const long phi = static_cast<long>(c_.size());
    // column j = coefficients of this * zeta^j
    Matrix<Rational> m(phi, std::vector<Rational>(phi, Rational(0)));
    for (long j = 0; j < phi; ++j) {
        Cyclotomic col = *this * root_of_unity(order_, j);
        Cyclotomic lifted_col = col.lifted(order_);
        for (long i = 0; i < phi; ++i) m[i][j] = lifted_col.c_[i];
    }
    std::vector<Rational> rhs(phi, Rational(0));
    rhs[0] = 1;
    auto x = solve_linear(m, rhs, static_cast<int>(phi));
    if (!x) fail(ErrorKind::InternalError, "singular multiplication matrix in cyclotomic inverse");
    return from_coeffs(order_, *x);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::galois(long k) const {
    if (order_ == 1) return *this;
    if (std::gcd(mod_pos(k, order_), order_) != 1)
        fail(ErrorKind::InvalidArgument, "galois exponent must be coprime to the order");
    auto t = table_for(order_);
    Cyclotomic out;
    out.order_ = order_;
    out.c_.assign(t->phi, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) add_power(out.c_, *t, static_cast<long>(i) * k, c_[i]);
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    if (a.order_ == 1 || b.order_ == 1) return false;  // normalized: one rational, one not
    long n = std::lcm(a.order_, b.order_);
    return a.lifted(n).c_ == b.lifted(n).c_;
}

std::string Cyclotomic::str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        std::string body;
        if (i == 0) {
            body = to_string(mag);
        } else {
            std::string z = "ζ" + std::to_string(order_);
            if (i > 1) z += "^" + std::to_string(i);
            body = (mag == 1) ? z : to_string(mag) + "*" + z;
        }
        if (out.empty())
            out = (sgn(c) < 0 ? "-" : "") + body;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op) {
    switch (op) {
        case CycOp::Add: return a + b;
        case CycOp::Mul: return a * b;
        case CycOp::Inv: return a.inverse();
        case CycOp::Conj: return a.conj();
    }
    return a;
}

}  // namespace zonotopal
