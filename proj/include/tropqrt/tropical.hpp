#pragma once

#include <utility>
#include <vector>

#include "tropqrt/point.hpp"
#include "tropqrt/rational.hpp"

namespace tropqrt {

/// Element of the max-plus semiring: an exact rational, or the bottom
/// element -inf. Addition is max (identity -inf), multiplication is
/// classical + (identity 0, absorbing -inf). There is exactly one
/// representation of -inf, so equality is structural and exact.
class TropScalar {
public:
    TropScalar() : finite_(true), value_(0) {}
    TropScalar(Rat value) : finite_(true), value_(std::move(value)) {
        value_.canonicalize();  // mpq comparisons assume canonical form
    }
    TropScalar(int value) : finite_(true), value_(value) {}

    static TropScalar neg_inf() { return TropScalar(Bottom{}); }

    bool is_finite() const { return finite_; }

    /// Only valid when finite.
    const Rat& value() const { return value_; }

    friend bool operator==(const TropScalar& a, const TropScalar& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    /// -inf compares strictly less than every rational.
    friend bool operator<(const TropScalar& a, const TropScalar& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
    friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
    friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

private:
    struct Bottom {};
    explicit TropScalar(Bottom) : finite_(false), value_(0) {}

    bool finite_;
    Rat value_;
};

/// max(a, b); -inf is the identity.
TropScalar trop_add(const TropScalar& a, const TropScalar& b);

/// a + b classically; -inf is absorbing, 0 is the identity.
TropScalar trop_mul(const TropScalar& a, const TropScalar& b);

/// "-inf" or the rational in lowest terms.
std::string trop_to_string(const TropScalar& s);

/// One term coeff + xexp*x + yexp*y of a tropical polynomial. A coeff of
/// -inf makes the term never dominant.
struct TropMonomial {
    int xexp = 0;
    int yexp = 0;
    TropScalar coeff;
};

/// Max of finitely many affine terms with pairwise-distinct exponent
/// pairs; at least one coefficient must be finite. Both invariants are
/// enforced at construction.
class TropPolynomial {
public:
    explicit TropPolynomial(std::vector<TropMonomial> terms);

    const std::vector<TropMonomial>& terms() const { return terms_; }

private:
    std::vector<TropMonomial> terms_;
};

struct EvalResult {
    TropScalar value;
    /// Exponent pairs of all terms attaining the value, in term order.
    /// The point lies on the curve of f iff this has >= 2 elements.
    std::vector<std::pair<int, int>> argmax;
};

/// Evaluates f at p: value = max over terms, argmax = the terms attaining
/// it (ties decided by exact rational equality).
EvalResult eval_poly(const TropPolynomial& f, const Point& p);

}  // namespace tropqrt
