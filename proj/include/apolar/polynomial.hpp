#pragma once

// Polynomials over an exact coefficient field, stored as ordered term maps
// keyed by graded-lex order (leading term first).  Includes the contraction
// action used to define apolarity: a monomial g acts on a monomial m by
// mapping it to m/g when g divides m and to zero otherwise, extended
// bilinearly.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/monomial.hpp"
#include "apolar/util.hpp"

namespace apolar {

template <typename F>
struct Polynomial {
    using K = typename F::Elem;

    int n = 0;
    std::map<Monomial, K, GradedLexGreater> terms;

    Polynomial() = default;
    explicit Polynomial(int n_) : n(n_) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const Monomial& m, const K& c) {
        if (F::is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = F::add(it->second, c);
            if (F::is_zero(it->second)) terms.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms) r.add_term(m, F::neg(c));
        return r;
    }
    Polynomial scaled(const K& c) const {
        Polynomial r(n);
        if (F::is_zero(c)) return r;
        for (const auto& [m, x] : terms) r.terms.emplace(m, F::mul(x, c));
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(n);
        for (const auto& [ma, ca] : terms) {
            for (const auto& [mb, cb] : o.terms) {
                r.add_term(ma * mb, F::mul(ca, cb));
            }
        }
        return r;
    }
    Polynomial times_monomial(const Monomial& m) const {
        Polynomial r(n);
        for (const auto& [ma, ca] : terms) r.terms.emplace(ma * m, ca);
        return r;
    }

    // Zero coefficients are never stored, so structural equality of the term
    // maps is semantic equality.
    bool operator==(const Polynomial& o) const {
        return n == o.n && terms == o.terms;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms) {
            if (d < 0) {
                d = m.degree();
            } else if (m.degree() != d) {
                return false;
            }
        }
        return true;
    }
    // Standard degree, row degree vector, column degree vector of the leading
    // term (all terms agree when homogeneous in the multigrading).
    Multidegree multidegree() const {
        if (terms.empty()) return Multidegree(std::vector<int>(n, 0), std::vector<int>(n, 0));
        return terms.begin()->first.multidegree();
    }
    bool is_multihomogeneous() const {
        if (terms.empty()) return true;
        Multidegree d = terms.begin()->first.multidegree();
        for (const auto& [m, c] : terms) {
            if (!(m.multidegree() == d)) return false;
        }
        return true;
    }

    std::string to_string(const std::string& letter = "X") const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms) {
            std::string cs = F::to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            if (m.e.empty()) {
                os << mag;
            } else if (mag == "1") {
                os << m.to_string(letter);
            } else {
                os << mag << "*" << m.to_string(letter);
            }
        }
        return os.str();
    }
};

// Contraction of f by the single variable X[i][j]: divide each term by the
// variable when possible, kill it otherwise.
template <typename F>
Polynomial<F> contract_variable(const Polynomial<F>& f, int i, int j) {
    Polynomial<F> r(f.n);
    Monomial v = Monomial::var(f.n, i, j);
    for (const auto& [m, c] : f.terms) {
        if (v.divides(m)) r.terms.emplace(v.divide_into(m), c);
    }
    return r;
}

// Contraction g . f for a monomial g (divide-or-kill termwise).
template <typename F>
Polynomial<F> contract(const Monomial& g, const Polynomial<F>& f) {
    Polynomial<F> r(f.n);
    for (const auto& [m, c] : f.terms) {
        if (g.divides(m)) r.terms.emplace(g.divide_into(m), c);
    }
    return r;
}

// Contraction g . f extended bilinearly in g.
template <typename F>
Polynomial<F> contract(const Polynomial<F>& g, const Polynomial<F>& f) {
    Polynomial<F> r(f.n);
    for (const auto& [mg, cg] : g.terms) {
        for (const auto& [mf, cf] : f.terms) {
            if (mg.divides(mf)) r.add_term(mg.divide_into(mf), F::mul(cg, cf));
        }
    }
    return r;
}

namespace detail {

// Token scanner for the polynomial text format produced by to_string:
//   terms separated by + or -, each term  [coeff *] X[i,j][^e] [* ...]
inline void skip_ws(const std::string& s, std::size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

inline long long parse_int(const std::string& s, std::size_t& p) {
    skip_ws(s, p);
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
        throw UsageError("expected integer at position " + std::to_string(start) +
                         " in polynomial text");
    }
    return std::stoll(s.substr(start, p - start));
}

}  // namespace detail

// Parse the format emitted by Polynomial::to_string.  Coefficients are
// integers (optionally a/b over the rationals via from_int and division is
// not needed for the inputs this tool accepts).
template <typename F>
Polynomial<F> parse_polynomial(const std::string& s, int n,
                               const std::string& letter = "X") {
    using K = typename F::Elem;
    Polynomial<F> out(n);
    std::size_t p = 0;
    detail::skip_ws(s, p);
    if (p < s.size() && s.compare(p, 1, "0") == 0 && p + 1 == s.size()) return out;
    bool first = true;
    while (p < s.size()) {
        detail::skip_ws(s, p);
        if (p >= s.size()) break;
        int sign = 1;
        if (s[p] == '+') {
            ++p;
        } else if (s[p] == '-') {
            sign = -1;
            ++p;
        } else if (!first) {
            throw UsageError("expected + or - between polynomial terms");
        }
        first = false;
        detail::skip_ws(s, p);
        long long coeff = 1;
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            coeff = detail::parse_int(s, p);
            detail::skip_ws(s, p);
            if (p < s.size() && s[p] == '*') {
                ++p;
            }
        }
        Monomial m(n);
        detail::skip_ws(s, p);
        while (p < s.size() && s.compare(p, letter.size(), letter) == 0) {
            p += letter.size();
            detail::skip_ws(s, p);
            if (p >= s.size() || s[p] != '[') throw UsageError("expected [ after variable letter");
            ++p;
            long long i = detail::parse_int(s, p);
            detail::skip_ws(s, p);
            if (p >= s.size() || s[p] != ',') throw UsageError("expected , in variable index");
            ++p;
            long long j = detail::parse_int(s, p);
            detail::skip_ws(s, p);
            if (p >= s.size() || s[p] != ']') throw UsageError("expected ] after variable index");
            ++p;
            if (i < 1 || i > n || j < 1 || j > n) {
                throw UsageError("variable index out of range for n=" + std::to_string(n));
            }
            int exp = 1;
            detail::skip_ws(s, p);
            if (p < s.size() && s[p] == '^') {
                ++p;
                exp = static_cast<int>(detail::parse_int(s, p));
                if (exp < 1) throw UsageError("exponent must be positive");
            }
            m = m * Monomial::var(n, static_cast<int>(i - 1), static_cast<int>(j - 1), exp);
            detail::skip_ws(s, p);
            if (p < s.size() && s[p] == '*') {
                ++p;
                detail::skip_ws(s, p);
            } else {
                break;
            }
        }
        K c = F::from_int(sign * coeff);
        out.add_term(m, c);
    }
    return out;
}

}  // namespace apolar
