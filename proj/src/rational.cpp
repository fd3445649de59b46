#include "zonotopal/rational.hpp"

#include <mutex>
#include <numeric>

#include "zonotopal/errors.hpp"

namespace zonotopal {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) fail(ErrorKind::InvalidArgument, "empty rational");
    auto valid_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) fail(ErrorKind::InvalidArgument, "bad rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer d(den);
    if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac_part(const Rational& q) { return q - Rational(floor_of(q)); }

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational bernoulli(int k) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (static_cast<int>(table.size()) <= k) {
        int m = static_cast<int>(table.size());
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-s / Rational(m + 1));
    }
    return table[k];
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

}  // namespace zonotopal
