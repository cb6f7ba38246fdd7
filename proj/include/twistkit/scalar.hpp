#pragma once

#include <map>
#include <set>
#include <string>

#include "twistkit/polynomial.hpp"

namespace twistkit {

/// Exact rational function over Q(i) in named coordinate variables.
///
/// Canonical representation: denominator nonzero, gcd(num, den) = 1, and the
/// denominator's graded-lex leading coefficient is 1. Zero is (0, 1).
/// Equality is therefore a structural check. Values are immutable.
class Scalar {
public:
    Scalar() = default;  // zero
    Scalar(long n) : num_(GaussianRational(n)) {}  // NOLINT: implicit by design
    explicit Scalar(const GaussianRational& c) : num_(Polynomial(c)) {}
    explicit Scalar(Polynomial p) : num_(std::move(p)) {}
    Scalar(Polynomial num, Polynomial den);  // reduces to canonical form

    static Scalar variable(const std::string& name) { return Scalar(Polynomial::variable(name)); }
    static Scalar i() { return Scalar(GaussianRational::i()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    GaussianRational constant_value() const { return num_.constant_value(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(int n) const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Deterministic container order (compares printed form).
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.str() < b.str(); }

    Scalar partial_derivative(const std::string& var) const;
    Scalar conjugate() const;
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& point) const;

    std::set<std::string> variables() const;

    std::string str() const;
    /// str() wrapped in parentheses when needed inside a product.
    std::string str_factor() const;

private:
    Polynomial num_;
    Polynomial den_{GaussianRational(1)};
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar scalar_arith(ArithOp op, const Scalar& lhs, const Scalar& rhs);

}  // namespace twistkit
