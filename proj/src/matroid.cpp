#include "zonotopal/matroid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

void BivarPoly::add(int i, int j, const Integer& c) {
    if (c == 0) return;
    auto& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
}

Integer BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Integer(0) : it->second;
}

namespace {
Rational rpow(const Rational& a, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= a;
    return r;
}
}  // namespace

Rational BivarPoly::evaluate(const Rational& a, const Rational& b) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += Rational(c) * rpow(a, e.first) * rpow(b, e.second);
    return sum;
}

std::vector<Integer> BivarPoly::hilbert_form(const Rational& a, int shift) const {
    // q^shift * sum c a^i q^{-j}
    std::map<int, Rational> acc;
    for (const auto& [e, c] : terms_) acc[shift - e.second] += Rational(c) * rpow(a, e.first);
    std::vector<Integer> out;
    for (const auto& [k, v] : acc) {
        if (v == 0) continue;
        if (k < 0 || !is_integer(v)) fail(ErrorKind::InternalError, "hilbert form is not a polynomial");
        if (static_cast<int>(out.size()) <= k) out.resize(k + 1, Integer(0));
        out[k] = v.get_num();
    }
    return out;
}

BivarPoly operator+(const BivarPoly& x, const BivarPoly& y) {
    BivarPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add(e.first, e.second, c);
    return r;
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, Integer>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        auto var = [&](const char* n, int k) {
            if (k == 0) return;
            mono += n;
            if (k > 1) mono += "^" + std::to_string(k);
        };
        var("a", e.first);
        var("b", e.second);
        if (mono.empty())
            os << mag.get_str();
        else {
            if (mag != 1) os << mag.get_str();
            os << mono;
        }
    }
    return os.str();
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

namespace {

template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    IndexSet s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

std::vector<IndexSet> bases(const GList& x) {
    const int d = x.dim();
    if (rank_of(x, x.all()) != d) fail(ErrorKind::RankDeficient, "list does not span: rank " +
                                                                 std::to_string(rank_of(x, x.all())) + " < " +
                                                                 std::to_string(d));
    std::vector<IndexSet> out;
    for_each_subset(x.size(), d, [&](const IndexSet& s) {
        if (rank_of(x, s) == d) out.push_back(s);
    });
    return out;
}

IndexSet closure(const GList& x, const IndexSet& s) {
    const int r = rank_of(x, s);
    IndexSet out;
    for (int i = 0; i < x.size(); ++i) {
        IndexSet t = s;
        if (!std::binary_search(s.begin(), s.end(), i)) {
            t.push_back(i);
            std::sort(t.begin(), t.end());
        }
        if (rank_of(x, t) == r) out.push_back(i);
    }
    return out;
}

std::vector<IndexSet> hyperplane_flats(const GList& x) {
    const int d = x.dim();
    std::set<IndexSet> flats;
    if (d == 0) return {};
    for_each_subset(x.size(), d - 1, [&](const IndexSet& s) {
        if (rank_of(x, s) == d - 1) flats.insert(closure(x, s));
    });
    return {flats.begin(), flats.end()};
}

std::vector<IndexSet> cocircuits(const GList& x) {
    const int r = rank_of(x, x.all());
    std::set<IndexSet> out;
    for (const auto& f : hyperplane_flats(x)) {
        if (rank_of(x, f) != r - 1) continue;
        out.insert(set_difference(x.all(), f));
    }
    std::vector<IndexSet> v(out.begin(), out.end());
    for (const auto& c : v) {
        if (rank_of(x, set_difference(x.all(), c)) >= r) fail(ErrorKind::InternalError, "cocircuit does not cut");
        for (int i : c) {
            IndexSet smaller = set_difference(c, {i});
            if (rank_of(x, set_difference(x.all(), smaller)) < r)
                fail(ErrorKind::InternalError, "cocircuit is not minimal");
        }
    }
    return v;
}

IndexSet external_activity(const GList& x, const IndexSet& b) {
    IndexSet out;
    for (int j = 0; j < x.size(); ++j) {
        if (std::binary_search(b.begin(), b.end(), j)) continue;
        IndexSet earlier;
        for (int i : b)
            if (i < j) earlier.push_back(i);
        IndexSet with = earlier;
        with.push_back(j);
        std::sort(with.begin(), with.end());
        if (rank_of(x, with) == rank_of(x, earlier)) out.push_back(j);
    }
    return out;
}

namespace {

BivarPoly subset_sum(const GList& x, bool arithmetic) {
    const int n = x.size();
    const int d = x.dim();
    if (n > 20) fail(ErrorKind::InvalidArgument, "list too long for subset summation");
    // Collect weights per (d - r, |S| - r) first, then expand the binomials.
    std::map<std::pair<int, int>, Integer> w;
    for (long mask = 0; mask < (1L << n); ++mask) {
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1L << i)) s.push_back(i);
        int r = rank_of(x, s);
        Integer m = arithmetic ? Integer(multiplicity(x, s)) : Integer(1);
        w[{d - r, static_cast<int>(s.size()) - r}] += m;
    }
    BivarPoly p;
    for (const auto& [e, c] : w) {
        // c (a-1)^i (b-1)^j
        for (int k = 0; k <= e.first; ++k)
            for (int l = 0; l <= e.second; ++l) {
                Integer t = c * binomial(e.first, k) * binomial(e.second, l);
                if ((e.first - k + e.second - l) % 2) t = -t;
                p.add(k, l, t);
            }
    }
    return p;
}

}  // namespace

BivarPoly tutte(const GList& x) { return subset_sum(x, false); }
BivarPoly arithmetic_tutte(const GList& x) { return subset_sum(x, true); }

}  // namespace zonotopal
