#include "zonotopal/laurent.hpp"

namespace zonotopal {

ZLaurent ZLaurent::monomial(int tvars, int zexp, const MPoly& coeff) {
    ZLaurent l(tvars);
    l.add_term(zexp, coeff);
    return l;
}

void ZLaurent::add_term(int zexp, const MPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(zexp);
    if (it == terms_.end()) {
        terms_.emplace(zexp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ZLaurent& ZLaurent::operator+=(const ZLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent out(a.tvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

ZLaurent ZLaurent::truncated_above(int max_exp) const {
    ZLaurent out(tvars_);
    for (const auto& [e, c] : terms_)
        if (e <= max_exp) out.terms_.emplace(e, c);
    return out;
}

MPoly residue(const ZLaurent& l) {
    auto it = l.terms().find(-1);
    if (it == l.terms().end()) return MPoly(VarKind::T, l.tvars());
    return it->second;
}

}  // namespace zonotopal
