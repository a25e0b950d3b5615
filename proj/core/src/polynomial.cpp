#include "gradedres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gradedres {

PolyRingPtr make_poly_ring(Field field, std::vector<std::string> vars, TermOrder order) {
    return std::make_shared<const PolyRing>(PolyRing{std::move(field), std::move(vars), order});
}

void Polynomial::check_same_ring(const Polynomial& g) const {
    if (!ring_ || !g.ring_ || !ring_->compatible(*g.ring_))
        throw algebra_error("variable-set mismatch");
}

Polynomial Polynomial::constant(PolyRingPtr ring, const mpq_class& c) {
    return monomial(std::move(ring), Monomial::one(ring ? ring->nvars() : 0), c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, int index) {
    std::vector<int> e(ring->nvars(), 0);
    e.at(index) = 1;
    return monomial(std::move(ring), Monomial(std::move(e)), 1);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Monomial m, const mpq_class& c) {
    Polynomial f(ring);
    mpq_class cc = ring->field.canonical(c);
    if (cc != 0) f.terms_.push_back(Term{std::move(m), std::move(cc)});
    return f;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    const TermOrder ord = ring->order;
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compare(a.mono, b.mono, ord) > 0;
    });
    Polynomial f(ring);
    for (auto& t : terms) {
        mpq_class c = ring->field.canonical(t.coeff);
        if (c == 0) continue;
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            mpq_class s = ring->field.add(f.terms_.back().coeff, c);
            if (s == 0)
                f.terms_.pop_back();
            else
                f.terms_.back().coeff = std::move(s);
        } else {
            f.terms_.push_back(Term{std::move(t.mono), std::move(c)});
        }
    }
    return f;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw algebra_error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().mono.degree();
}

mpq_class Polynomial::constant_part() const {
    for (const auto& t : terms_)
        if (t.mono.degree() == 0) return t.coeff;
    return mpq_class(0);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    if (is_zero()) return g;
    if (g.is_zero()) return *this;
    check_same_ring(g);
    const auto& field = ring_->field;
    const TermOrder ord = ring_->order;
    Polynomial out(ring_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = compare(terms_[i].mono, g.terms_[j].mono, ord);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(g.terms_[j++]);
        } else {
            mpq_class s = field.add(terms_[i].coeff, g.terms_[j].coeff);
            if (s != 0) out.terms_.push_back(Term{terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = ring_->field.neg(t.coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    if (is_zero()) return *this;
    if (g.is_zero()) return g;
    check_same_ring(g);
    const auto& field = ring_->field;
    std::vector<Term> prods;
    prods.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : g.terms_)
            prods.push_back(Term{a.mono * b.mono, field.mul(a.coeff, b.coeff)});
    return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    mpq_class cc = ring_ ? ring_->field.canonical(c) : c;
    Polynomial out(ring_);
    if (cc == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = ring_->field.mul(t.coeff, cc);
    return out;
}

Polynomial Polynomial::term_multiple(const mpq_class& c, const Monomial& m) const {
    mpq_class cc = ring_ ? ring_->field.canonical(c) : c;
    Polynomial out(ring_);
    if (cc == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{t.mono * m, ring_->field.mul(t.coeff, cc)});
    return out;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != g.terms_[i].mono || terms_[i].coeff != g.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coeff < 0;
        mpq_class ac = neg ? mpq_class(-t.coeff) : t.coeff;
        std::string term;
        bool have_factor = false;
        if (ac != 1 || t.mono.degree() == 0) {
            term += ac.get_str();
            have_factor = true;
        }
        for (int v = 0; v < t.mono.nvars(); ++v) {
            if (t.mono[v] == 0) continue;
            if (have_factor) term += "*";
            term += ring_->vars[v];
            if (t.mono[v] > 1) term += "^" + std::to_string(t.mono[v]);
            have_factor = true;
        }
        if (first)
            out += (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

namespace {

struct PolyParser {
    const PolyRingPtr& ring;
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw algebra_error("polynomial syntax error at column " + std::to_string(pos + 1) +
                            ": " + msg);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start) fail("expected a variable name");
        return std::string(text.substr(start, pos - start));
    }

    // factor := coefficient | var ['^' exp]
    Polynomial parse_factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            mpq_class q(num);
            if (peek() == '/') {
                ++pos;
                mpz_class den = parse_integer();
                if (den == 0) fail("zero denominator");
                q = mpq_class(num, den);
                q.canonicalize();
            }
            return Polynomial::constant(ring, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            int index = -1;
            for (int v = 0; v < ring->nvars(); ++v)
                if (ring->vars[v] == name) { index = v; break; }
            if (index < 0) fail("unknown variable '" + name + "'");
            long exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = parse_integer().get_si();
                if (exp < 0) fail("negative exponent");
            }
            std::vector<int> e(ring->nvars(), 0);
            e[index] = static_cast<int>(exp);
            return Polynomial::monomial(ring, Monomial(std::move(e)), 1);
        }
        fail("expected a coefficient or variable");
    }

    // term := factor ('*' factor)*
    Polynomial parse_term() {
        Polynomial f = parse_factor();
        while (peek() == '*') {
            ++pos;
            f = f * parse_factor();
        }
        return f;
    }

    Polynomial parse() {
        Polynomial f(ring);
        bool negate = false;
        if (peek() == '-') { negate = true; ++pos; }
        else if (peek() == '+') ++pos;
        Polynomial t = parse_term();
        f = negate ? -t : t;
        while (!eof()) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Polynomial u = parse_term();
                f = (c == '+') ? f + u : f - u;
            } else {
                fail("unexpected character '" + std::string(1, c) + "'");
            }
        }
        return f;
    }
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
    PolyParser p{ring, text};
    if (p.eof()) throw algebra_error("polynomial syntax error: empty input");
    return p.parse();
}

}  // namespace gradedres
