#include "twistkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "twistkit/errors.hpp"

namespace twistkit {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial Monomial::variable(const std::string& name, unsigned exp) {
    Monomial m;
    if (exp > 0) m.exps_[name] = exp;
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [name, e] : exps_) d += e;
    return d;
}

unsigned Monomial::exponent(const std::string& var) const {
    auto it = exps_.find(var);
    return it == exps_.end() ? 0u : it->second;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [name, e] : o.exps_) r.exps_[name] += e;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [name, e] : exps_) {
        if (o.exponent(name) < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    for (const auto& [name, e] : o.exps_) {
        unsigned mine = exponent(name);
        if (e > mine) r.exps_[name] = e - mine;
    }
    return r;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [name, e] : exps_) {
        if (!out.empty()) out += "*";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        // Next variable in alphabetical order across both monomials.
        std::string name;
        if (ia == ea) name = ib->first;
        else if (ib == eb) name = ia->first;
        else name = std::min(ia->first, ib->first);
        unsigned xa = (ia != ea && ia->first == name) ? ia->second : 0;
        unsigned xb = (ib != eb && ib->first == name) ? ib->second : 0;
        if (xa != xb) return xa < xb;
        if (ia != ea && ia->first == name) ++ia;
        if (ib != eb && ib->first == name) ++ib;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial basics
// ---------------------------------------------------------------------------

Polynomial::Polynomial(const GaussianRational& c) {
    if (!c.is_zero()) terms_[Monomial()] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_[Monomial::variable(name)] = GaussianRational(1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const GaussianRational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& [name, e] : m.exponents()) vars.insert(name);
    }
    return vars;
}

const std::pair<const Monomial, GaussianRational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r{GaussianRational(1)};
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e == 0) continue;
        Monomial dm = m;
        if (e == 1) dm.exponents().erase(var);
        else dm.exponents()[var] = e - 1;
        r.add_term(dm, c * GaussianRational(static_cast<long>(e)));
    }
    return r;
}

Polynomial Polynomial::conjugate() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

GaussianRational Polynomial::evaluate(const std::map<std::string, GaussianRational>& point) const {
    GaussianRational total(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational v = c;
        for (const auto& [name, e] : m.exponents()) {
            auto it = point.find(name);
            if (it == point.end()) throw MissingVariable(name);
            for (unsigned k = 0; k < e; ++k) v *= it->second;
        }
        total += v;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Division and gcd
// ---------------------------------------------------------------------------

bool Polynomial::divide_exact(const Polynomial& a, const Polynomial& b, Polynomial* quotient) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial q;
    Polynomial r = a;
    const auto& [lm, lc] = b.leading_term();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!lm.divides(rm)) return false;
        Polynomial t = Polynomial::term(lm.divide_into(rm), rc / lc);
        q += t;
        r -= t * b;
    }
    if (quotient) *quotient = q;
    return true;
}

namespace {

// Univariate view: coefficients of powers of the main variable.
std::map<unsigned, Polynomial> univariate_view(const Polynomial& p, const std::string& x) {
    std::map<unsigned, Polynomial> coeffs;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(x);
        Monomial rest = m;
        rest.exponents().erase(x);
        coeffs[e].add_term(rest, c);
    }
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->second.is_zero()) it = coeffs.erase(it);
        else ++it;
    }
    return coeffs;
}

unsigned degree_in(const Polynomial& p, const std::string& x) {
    unsigned d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(x));
    return d;
}

Polynomial leading_coefficient_in(const Polynomial& p, const std::string& x) {
    auto view = univariate_view(p, x);
    if (view.empty()) return Polynomial();
    return view.rbegin()->second;
}

Polynomial times_power(const Polynomial& p, const std::string& x, unsigned e) {
    if (e == 0) return p;
    return p * Polynomial::term(Monomial::variable(x, e), GaussianRational(1));
}

// Content of p as a univariate polynomial in x: gcd of its coefficients.
Polynomial content_in(const Polynomial& p, const std::string& x) {
    Polynomial c;
    for (const auto& [e, coeff] : univariate_view(p, x)) c = Polynomial::gcd(c, coeff);
    return c;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_term().second.inverse());
}

// Monic Euclid over the field Q(i); fast path for one variable.
Polynomial gcd_univariate(Polynomial a, Polynomial b, const std::string& x) {
    a = monic(a);
    b = monic(b);
    if (degree_in(a, x) < degree_in(b, x)) std::swap(a, b);
    while (!b.is_zero() && degree_in(b, x) > 0) {
        unsigned db = degree_in(b, x);
        GaussianRational lb = b.leading_term().second;  // graded-lex leader = x-leader here
        Polynomial r = a;
        while (!r.is_zero()) {
            unsigned dr = degree_in(r, x);
            if (dr < db) break;
            GaussianRational lr = leading_coefficient_in(r, x).constant_value();
            r -= times_power(b, x, dr - db).scaled(lr / lb);
        }
        a = b;
        b = monic(r);
    }
    if (!b.is_zero()) return Polynomial(GaussianRational(1));  // constant remainder
    return monic(a);
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b in x.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const std::string& x) {
    unsigned db = degree_in(b, x);
    Polynomial lb = leading_coefficient_in(b, x);
    unsigned da = degree_in(a, x);
    int scale = static_cast<int>(da) - static_cast<int>(db) + 1;
    while (!a.is_zero()) {
        unsigned d = degree_in(a, x);
        if (d < db) break;
        Polynomial la = leading_coefficient_in(a, x);
        a = lb * a - times_power(la * b, x, d - db);
        --scale;
    }
    for (int k = 0; k < scale; ++k) a = lb * a;
    return a;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    Polynomial q;
    if (!Polynomial::divide_exact(a, b, &q)) throw Error("internal: inexact division in gcd");
    return q;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(GaussianRational(1));

    std::set<std::string> vars = a.variables();
    for (const auto& v : b.variables()) vars.insert(v);
    if (vars.empty()) return Polynomial(GaussianRational(1));
    if (vars.size() == 1) return gcd_univariate(a, b, *vars.begin());

    // Main variable: smallest degree keeps the remainder sequence short.
    std::string x = *vars.begin();
    unsigned best = ~0u;
    for (const auto& v : vars) {
        unsigned d = std::max(degree_in(a, v), degree_in(b, v));
        if (d > 0 && d < best) {
            best = d;
            x = v;
        }
    }

    Polynomial ca = content_in(a, x);
    Polynomial cb = content_in(b, x);
    Polynomial cg = gcd(ca, cb);

    Polynomial A = exact_quotient(a, ca);
    Polynomial B = exact_quotient(b, cb);
    if (degree_in(A, x) < degree_in(B, x)) std::swap(A, B);

    // Subresultant remainder sequence (Collins/Brown-Traub): divides each
    // pseudo-remainder by the predicted factor, keeping coefficients tame
    // without per-step content extraction.
    Polynomial g{GaussianRational(1)}, h{GaussianRational(1)};
    while (true) {
        if (degree_in(B, x) == 0) {
            B = Polynomial(GaussianRational(1));
            break;
        }
        unsigned delta = degree_in(A, x) - degree_in(B, x);
        Polynomial R = pseudo_remainder(A, B, x);
        if (R.is_zero()) break;
        A = B;
        Polynomial divisor = g;
        for (unsigned k = 0; k < delta; ++k) divisor *= h;
        B = exact_quotient(R, divisor);
        g = leading_coefficient_in(A, x);
        if (delta > 0) {
            Polynomial num = g;
            for (unsigned k = 1; k < delta; ++k) num *= g;
            Polynomial den{GaussianRational(1)};
            for (unsigned k = 1; k < delta; ++k) den *= h;
            h = exact_quotient(num, den);
        }
    }
    Polynomial result = exact_quotient(B, content_in(B, x));
    return monic(cg * result);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Largest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const GaussianRational& c = it->second;
        std::string piece;
        bool negative = false;
        if (c.im() == 0) {
            Rational r = c.re();
            negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            if (m.is_one()) piece = rational_str(mag);
            else if (mag == 1) piece = m.str();
            else piece = rational_str(mag) + "*" + m.str();
        } else if (c.re() == 0) {
            Rational r = c.im();
            negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            piece = (mag == 1) ? "i" : rational_str(mag) + "*i";
            if (!m.is_one()) piece += "*" + m.str();
        } else {
            piece = "(" + c.str() + ")";
            if (!m.is_one()) piece += "*" + m.str();
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
