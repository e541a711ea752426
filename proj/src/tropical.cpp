#include "tropqrt/tropical.hpp"

#include <stdexcept>

namespace tropqrt {

TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
    return a < b ? b : a;
}

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
    if (!a.is_finite() || !b.is_finite()) return TropScalar::neg_inf();
    return TropScalar(a.value() + b.value());
}

std::string trop_to_string(const TropScalar& s) {
    return s.is_finite() ? rational_to_string(s.value()) : "-inf";
}

TropPolynomial::TropPolynomial(std::vector<TropMonomial> terms) : terms_(std::move(terms)) {
    bool any_finite = false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const TropMonomial& t = terms_[i];
        if (t.xexp < 0 || t.yexp < 0)
            throw std::invalid_argument("tropical monomial exponents must be nonnegative");
        if (t.coeff.is_finite()) any_finite = true;
        for (size_t j = 0; j < i; ++j)
            if (terms_[j].xexp == t.xexp && terms_[j].yexp == t.yexp)
                throw std::invalid_argument("tropical polynomial has duplicate exponent pair");
    }
    if (!any_finite)
        throw std::invalid_argument("tropical polynomial needs a finite coefficient");
}

EvalResult eval_poly(const TropPolynomial& f, const Point& p) {
    // Terms with -inf coefficients evaluate to -inf and never reach the
    // argmax because at least one term is finite.
    bool have = false;
    Rat best;
    std::vector<Rat> vals(f.terms().size());
    for (size_t i = 0; i < f.terms().size(); ++i) {
        const TropMonomial& t = f.terms()[i];
        if (!t.coeff.is_finite()) continue;
        Rat v = t.coeff.value();
        for (int k = 0; k < t.xexp; ++k) v += p.x;
        for (int k = 0; k < t.yexp; ++k) v += p.y;
        vals[i] = v;
        if (!have || v > best) {
            best = v;
            have = true;
        }
    }
    EvalResult result{TropScalar(best), {}};
    for (size_t i = 0; i < f.terms().size(); ++i) {
        const TropMonomial& t = f.terms()[i];
        if (t.coeff.is_finite() && vals[i] == best)
            result.argmax.emplace_back(t.xexp, t.yexp);
    }
    return result;
}

}  // namespace tropqrt
