#include "twistkit/scalar.hpp"

#include "twistkit/errors.hpp"

namespace twistkit {

namespace {

Polynomial quotient_of(const Polynomial& a, const Polynomial& g) {
    if (g.is_one()) return a;
    Polynomial q;
    if (!Polynomial::divide_exact(a, g, &q)) throw Error("internal: gcd quotient inexact");
    return q;
}

}  // namespace

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(GaussianRational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = quotient_of(num_, g);
            den_ = quotient_of(den_, g);
        }
    }
    GaussianRational lead = den_.leading_term().second;
    if (!lead.is_one()) {
        GaussianRational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Polynomial d = Polynomial::gcd(a.den_, b.den_);
    Polynomial bq = quotient_of(b.den_, d);
    Polynomial aq = quotient_of(a.den_, d);
    return Scalar(a.num_ * bq + b.num_ * aq, a.den_ * bq);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    // Cross-cancel before multiplying to keep the gcd in the constructor small.
    Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
    Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
    return Scalar(quotient_of(a.num_, g1) * quotient_of(b.num_, g2),
                  quotient_of(a.den_, g2) * quotient_of(b.den_, g1));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero scalar");
    return a * b.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar r(1);
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
}

Scalar Scalar::partial_derivative(const std::string& var) const {
    // Quotient rule; the canonicalizing constructor reduces the result.
    Polynomial dn = num_.derivative(var);
    Polynomial dd = den_.derivative(var);
    return Scalar(dn * den_ - num_ * dd, den_ * den_);
}

Scalar Scalar::conjugate() const {
    return Scalar(num_.conjugate(), den_.conjugate());
}

GaussianRational Scalar::evaluate(const std::map<std::string, GaussianRational>& point) const {
    GaussianRational d = den_.evaluate(point);
    if (d.is_zero()) throw PoleError("denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
}

std::set<std::string> Scalar::variables() const {
    std::set<std::string> vars = num_.variables();
    for (const auto& v : den_.variables()) vars.insert(v);
    return vars;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    // Only a power of a single variable is safe after '/'; '^' binds tighter
    // than '/' but '*' does not.
    bool simple = den_.terms().size() == 1 && den_.leading_term().second.is_one() &&
                  den_.leading_term().first.exponents().size() == 1;
    if (!simple) d = "(" + d + ")";
    return n + "/" + d;
}

std::string Scalar::str_factor() const {
    // Single products like "2", "x0^2", "2*x0" can stand unparenthesized.
    if (den_.is_one() && num_.terms().size() == 1) {
        std::string s = str();
        if (!s.empty() && s[0] != '-' && s.find('+') == std::string::npos &&
            s.find(" - ") == std::string::npos)
            return s;
    }
    return "(" + str() + ")";
}

Scalar scalar_arith(ArithOp op, const Scalar& lhs, const Scalar& rhs) {
    switch (op) {
        case ArithOp::Add: return lhs + rhs;
        case ArithOp::Sub: return lhs - rhs;
        case ArithOp::Mul: return lhs * rhs;
        case ArithOp::Div: return lhs / rhs;
    }
    throw Error("unreachable");
}

}  // namespace twistkit
