#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistkit/scalar.hpp"

namespace twistkit {

/// Strictly increasing tuple of 0-based frame indices.
using IndexTuple = std::vector<int>;

/// Sparse exterior-algebra element: Scalar coefficients on strictly
/// increasing index tuples. Degree-0 forms hold one coefficient on the
/// empty tuple.
class Form {
public:
    Form() : degree_(0) {}
    explicit Form(int degree) : degree_(degree) {}
    explicit Form(const Scalar& s) : degree_(0) {
        if (!s.is_zero()) terms_[{}] = s;
    }

    static Form zero(int degree) { return Form(degree); }
    /// Basis form e^{i1} ^ ... ^ e^{ip} for a strictly increasing tuple.
    static Form basis(const IndexTuple& idx, const Scalar& c = Scalar(1));

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexTuple, Scalar>& terms() const { return terms_; }

    Scalar coefficient(const IndexTuple& idx) const;
    void add_term(const IndexTuple& idx, const Scalar& c);

    /// Coefficient as a Scalar; requires degree 0.
    Scalar scalar_value() const;

    Form operator-() const;
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    Form& operator+=(const Form& o) { return *this = *this + o; }
    Form& operator-=(const Form& o) { return *this = *this - o; }

    Form scaled(const Scalar& c) const;
    Form conjugate() const;

    friend bool operator==(const Form& a, const Form& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& coframe_names) const;

private:
    int degree_;
    std::map<IndexTuple, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);
Form wedge_pow(const Form& a, unsigned n);

/// Sign of sorting a tuple into increasing order; 0 if it has repeats.
int sort_sign(IndexTuple& idx);

}  // namespace twistkit
