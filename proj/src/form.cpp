#include "twistkit/form.hpp"

#include <algorithm>
#include <sstream>

#include "twistkit/errors.hpp"

namespace twistkit {

Form Form::basis(const IndexTuple& idx, const Scalar& c) {
    for (size_t k = 1; k < idx.size(); ++k) {
        if (idx[k - 1] >= idx[k]) throw Error("basis tuple must be strictly increasing");
    }
    Form f(static_cast<int>(idx.size()));
    f.add_term(idx, c);
    return f;
}

Scalar Form::coefficient(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar() : it->second;
}

void Form::add_term(const IndexTuple& idx, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(idx.size()) != degree_) throw DegreeError("term arity does not match form degree");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_[idx] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Form::scalar_value() const {
    if (degree_ != 0) throw DegreeError("scalar_value requires a degree-0 form");
    return terms_.empty() ? Scalar() : terms_.begin()->second;
}

Form Form::operator-() const {
    Form r(degree_);
    for (const auto& [idx, c] : terms_) r.terms_[idx] = -c;
    return r;
}

Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        throw DegreeError("adding forms of different degree");
    }
    Form r = a;
    for (const auto& [idx, c] : b.terms_) r.add_term(idx, c);
    return r;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form Form::scaled(const Scalar& c) const {
    Form r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : terms_) r.terms_[idx] = v * c;
    return r;
}

Form Form::conjugate() const {
    Form r(degree_);
    for (const auto& [idx, v] : terms_) r.terms_[idx] = v.conjugate();
    return r;
}

int sort_sign(IndexTuple& idx) {
    int sign = 1;
    // Insertion sort, counting transpositions; fine at these arities.
    for (size_t k = 1; k < idx.size(); ++k) {
        for (size_t j = k; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (size_t k = 1; k < idx.size(); ++k) {
        if (idx[k - 1] == idx[k]) return 0;
    }
    return sign;
}

Form wedge(const Form& a, const Form& b) {
    Form r(a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            IndexTuple idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            int sign = sort_sign(idx);
            if (sign == 0) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(idx, c);
        }
    }
    return r;
}

Form wedge_pow(const Form& a, unsigned n) {
    Form r(Scalar(1));
    for (unsigned k = 0; k < n; ++k) r = wedge(r, a);
    return r;
}

std::string Form::str(const std::vector<std::string>& coframe_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        std::string mono;
        for (size_t k = 0; k < idx.size(); ++k) {
            if (k > 0) mono += "^";
            mono += coframe_names.at(static_cast<size_t>(idx[k]));
        }
        std::string piece;
        bool negative = !c.str().empty() && c.str()[0] == '-';
        const Scalar mag = negative ? -c : c;
        if (mono.empty()) {
            piece = mag.str();
        } else if (mag.is_one()) {
            piece = mono;
        } else {
            piece = mag.str_factor() + "*" + mono;
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << piece;
    }
    return os.str();
}

}  // namespace twistkit
