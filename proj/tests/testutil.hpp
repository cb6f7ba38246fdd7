#pragma once

#include <random>
#include <vector>

#include "twistkit/form.hpp"
#include "twistkit/model.hpp"
#include "twistkit/scalar.hpp"

namespace twistkit::testutil {

/// Deterministic generator for property-style tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(engine_);
    }

    GaussianRational gaussian() {
        Rational re(integer(-4, 4), integer(1, 3));
        Rational im(integer(-2, 2), integer(1, 2));
        return GaussianRational(re, im);
    }

    Polynomial polynomial(const std::vector<std::string>& vars, int terms, unsigned max_exp = 2) {
        Polynomial p;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (const auto& v : vars) {
                unsigned e = static_cast<unsigned>(integer(0, static_cast<long>(max_exp)));
                if (e > 0) m.exponents()[v] = e;
            }
            p.add_term(m, gaussian());
        }
        return p;
    }

    Scalar scalar(const std::vector<std::string>& vars, int terms = 3) {
        Polynomial num = polynomial(vars, terms);
        Polynomial den;
        do {
            den = polynomial(vars, 2, 1);
        } while (den.is_zero());
        return Scalar(num, den);
    }

    /// Constant-coefficient form on an n-dim frame.
    Form constant_form(int n, int degree, int terms) {
        Form f(degree);
        for (int t = 0; t < terms; ++t) {
            IndexTuple idx;
            while (static_cast<int>(idx.size()) < degree) {
                int v = static_cast<int>(integer(0, n - 1));
                bool dup = false;
                for (int u : idx) {
                    if (u == v) dup = true;
                }
                if (!dup) idx.push_back(v);
            }
            int sign = sort_sign(idx);
            if (sign == 0) continue;
            f.add_term(idx, Scalar(integer(-3, 3)));
        }
        return f;
    }

    /// Constant-coefficient 2-form supported on frame indices < base_dim.
    Form base_two_form(int base_dim, int terms) { return constant_form(base_dim, 2, terms); }

    std::map<std::string, GaussianRational> point(const std::vector<std::string>& vars) {
        std::map<std::string, GaussianRational> p;
        for (const auto& v : vars) {
            p[v] = GaussianRational(Rational(integer(1, 9), integer(1, 2)), Rational(0));
        }
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace twistkit::testutil

#include "twistkit/linalg.hpp"
#include "twistkit/twist.hpp"

namespace twistkit::testutil {

/// Valid constant-coefficient twist data on a flat n-torus: the action uses
/// the last `rank` frame directions, the curvature forms live on the first
/// n - rank, and a is a random constant invertible integer matrix.
inline TwistData random_twist_data(Rng& rng, int n, int rank) {
    TwistData T;
    for (int k = 0; k < rank; ++k) T.xi.push_back(VectorField::frame(n - rank + k));
    for (int k = 0; k < rank; ++k) {
        Form f;
        do {
            f = rng.base_two_form(n - rank, 2);
        } while (f.is_zero());
        T.F.push_back(f);
    }
    while (true) {
        Matrix a(static_cast<size_t>(rank), static_cast<size_t>(rank));
        for (int r = 0; r < rank; ++r) {
            for (int c = 0; c < rank; ++c) a.at(static_cast<size_t>(r), static_cast<size_t>(c)) = Scalar(rng.integer(-2, 2));
        }
        if (!a.determinant().is_zero()) {
            T.a = a;
            break;
        }
    }
    return T;
}

}  // namespace twistkit::testutil
