#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/gaussian.hpp"

namespace twistkit {

/// Monomial in named variables: sorted (name, exponent) pairs, exponents > 0.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(const std::string& name, unsigned exp = 1);

    unsigned total_degree() const;
    bool is_one() const { return exps_.empty(); }
    unsigned exponent(const std::string& var) const;

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;       // this | o
    Monomial divide_into(const Monomial& o) const;  // o / this

    const std::map<std::string, unsigned>& exponents() const { return exps_; }
    std::map<std::string, unsigned>& exponents() { return exps_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<std::string, unsigned> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent sequence taken in alphabetical variable order.
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

/// Sparse multivariate polynomial over Q(i).
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(const GaussianRational& c);
    static Polynomial variable(const std::string& name);
    static Polynomial term(const Monomial& m, const GaussianRational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    GaussianRational constant_value() const;  // requires is_constant()

    const TermMap& terms() const { return terms_; }

    unsigned total_degree() const;
    std::set<std::string> variables() const;

    /// Largest term in graded-lex order.
    const std::pair<const Monomial, GaussianRational>& leading_term() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(unsigned n) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(const std::string& var) const;
    Polynomial conjugate() const;
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& point) const;

    /// Exact quotient; nullopt when the division does not come out even.
    static bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial* quotient);

    /// Monic (leading coefficient 1) greatest common divisor.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string str() const;

    void add_term(const Monomial& m, const GaussianRational& c);

private:
    TermMap terms_;
};

}  // namespace twistkit
