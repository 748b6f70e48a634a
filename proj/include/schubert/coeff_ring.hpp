#pragma once

// Exact sparse multivariate polynomials over arbitrary-precision integers.
// A ring declaration is an ordered list of named generators, each with a
// grading degree; the term order is graded-lexicographic in declaration
// order, which fixes canonical printing.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

/// Parse failure with the byte offset of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Out-of-range index in a truncated free module.
class truncation_error : public std::runtime_error {
public:
    truncation_error(int index, int bound)
        : std::runtime_error("index " + std::to_string(index) +
                             " exceeds truncation bound " + std::to_string(bound)),
          index_(index), bound_(bound) {}
    int index() const { return index_; }
    int bound() const { return bound_; }

private:
    int index_;
    int bound_;
};

struct Generator {
    std::string name;
    int degree = 0;
};

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

class RingDecl;
using RingPtr = std::shared_ptr<const RingDecl>;

/// Immutable ordered list of graded generators.
class RingDecl {
public:
    explicit RingDecl(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (!is_identifier(g.name))
                throw std::invalid_argument("invalid generator name '" + g.name + "'");
            if (g.degree < 0)
                throw std::invalid_argument("generator '" + g.name + "' has negative degree");
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].name == g.name)
                    throw std::invalid_argument("duplicate generator name '" + g.name + "'");
        }
    }

    static RingPtr make(std::vector<Generator> gens) {
        return std::make_shared<RingDecl>(std::move(gens));
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        return std::nullopt;
    }

    /// Structural equality: same names and degrees in the same order.
    bool same(const RingDecl& other) const {
        if (this == &other) return true;
        if (gens_.size() != other.gens_.size()) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name != other.gens_[i].name || gens_[i].degree != other.gens_[i].degree)
                return false;
        return true;
    }

private:
    std::vector<Generator> gens_;
};

/// Product of generator powers; factors sorted by generator index, exponents > 0.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].second <= 0)
                throw std::invalid_argument("monomial exponent must be positive");
            if (i > 0 && factors_[i - 1].first == factors_[i].first)
                throw std::invalid_argument("repeated generator in monomial");
        }
    }

    static Monomial one() { return Monomial(); }

    static Monomial gen(int index, int exp = 1) { return Monomial({{index, exp}}); }

    bool is_unit() const { return factors_.empty(); }
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    int exponent(int index) const {
        for (const auto& [g, e] : factors_)
            if (g == index) return e;
        return 0;
    }

    int weighted_degree(const RingDecl& ring) const {
        int d = 0;
        for (const auto& [g, e] : factors_) d += ring.gen(g).degree * e;
        return d;
    }

    Monomial times(const Monomial& other) const {
        std::vector<std::pair<int, int>> out;
        out.reserve(factors_.size() + other.factors_.size());
        auto a = factors_.begin(), b = other.factors_.begin();
        while (a != factors_.end() || b != other.factors_.end()) {
            if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
                out.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                out.push_back(*b++);
            else {
                out.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        Monomial m;
        m.factors_ = std::move(out);
        return m;
    }

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// -1/0/+1 lexicographic comparison in declaration order.
    static int lex_compare(const Monomial& a, const Monomial& b) {
        auto x = a.factors_.begin(), y = b.factors_.begin();
        while (x != a.factors_.end() || y != b.factors_.end()) {
            int gx = x == a.factors_.end() ? INT_MAX : x->first;
            int gy = y == b.factors_.end() ? INT_MAX : y->first;
            if (gx < gy) return 1;   // a has a power of an earlier generator
            if (gy < gx) return -1;
            if (x->second != y->second) return x->second > y->second ? 1 : -1;
            ++x, ++y;
        }
        return 0;
    }

private:
    std::vector<std::pair<int, int>> factors_;
};

/// Ascending graded-lex order for term maps; printing iterates in reverse.
struct MonomialOrder {
    const RingDecl* ring = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.weighted_degree(*ring), db = b.weighted_degree(*ring);
        if (da != db) return da < db;
        return Monomial::lex_compare(a, b) < 0;
    }
};

/// Graded-degree query result: zero polynomial is "any", otherwise the
/// common degree of all terms or "inhomogeneous".
struct GradedDegree {
    enum class Kind { any, homogeneous, inhomogeneous };
    Kind kind = Kind::any;
    int value = 0;

    bool is_homogeneous() const { return kind != Kind::inhomogeneous; }
    bool of_degree(int d) const {
        return kind == Kind::any || (kind == Kind::homogeneous && value == d);
    }
    std::string str() const {
        switch (kind) {
            case Kind::any: return "any";
            case Kind::inhomogeneous: return "inhomogeneous";
            default: return std::to_string(value);
        }
    }
};

class CoeffPoly {
public:
    using TermMap = std::map<Monomial, mpz_class, MonomialOrder>;

    explicit CoeffPoly(RingPtr ring)
        : ring_(std::move(ring)), terms_(MonomialOrder{ring_.get()}) {
        if (!ring_) throw std::invalid_argument("null ring declaration");
    }

    static CoeffPoly zero(RingPtr ring) { return CoeffPoly(std::move(ring)); }

    static CoeffPoly constant(RingPtr ring, mpz_class value) {
        CoeffPoly p(std::move(ring));
        p.add_term(Monomial::one(), std::move(value));
        return p;
    }

    static CoeffPoly generator(RingPtr ring, std::string_view name) {
        auto idx = ring->find(name);
        if (!idx)
            throw std::invalid_argument("'" + std::string(name) + "' is not a ring generator");
        CoeffPoly p(std::move(ring));
        p.add_term(Monomial::gen(static_cast<int>(*idx)), 1);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
    }

    void add_term(Monomial m, mpz_class c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CoeffPoly operator-() const {
        CoeffPoly out(ring_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    CoeffPoly& operator+=(const CoeffPoly& other) {
        check_ring(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    CoeffPoly& operator-=(const CoeffPoly& other) {
        check_ring(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }

    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
        a.check_ring(b);
        CoeffPoly out(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    CoeffPoly scaled(const mpz_class& c) const {
        CoeffPoly out(ring_);
        if (c == 0) return out;
        for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
        return out;
    }

    CoeffPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        CoeffPoly out = constant(ring_, 1);
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    bool operator==(const CoeffPoly& other) const {
        if (!ring_->same(*other.ring_)) return false;
        if (terms_.size() != other.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second) return false;
        return true;
    }
    bool operator!=(const CoeffPoly& other) const { return !(*this == other); }

    GradedDegree graded_degree() const {
        GradedDegree out;
        for (const auto& [m, c] : terms_) {
            int d = m.weighted_degree(*ring_);
            if (out.kind == GradedDegree::Kind::any) {
                out.kind = GradedDegree::Kind::homogeneous;
                out.value = d;
            } else if (out.value != d) {
                return {GradedDegree::Kind::inhomogeneous, 0};
            }
        }
        return out;
    }

    /// Rewrite over a ring that contains every used generator, matched by name.
    CoeffPoly mapped(const RingPtr& target) const {
        CoeffPoly out(target);
        for (const auto& [m, c] : terms_) {
            std::vector<std::pair<int, int>> factors;
            for (const auto& [g, e] : m.factors()) {
                auto idx = target->find(ring_->gen(g).name);
                if (!idx)
                    throw std::invalid_argument("generator '" + ring_->gen(g).name +
                                                "' not present in target ring");
                factors.emplace_back(static_cast<int>(*idx), e);
            }
            out.add_term(Monomial(std::move(factors)), c);
        }
        return out;
    }

    /// Index-preserving relabel onto a ring with identical arity and degrees.
    CoeffPoly with_ring(const RingPtr& target) const {
        if (target->size() != ring_->size())
            throw std::invalid_argument("relabel target ring has different arity");
        for (std::size_t i = 0; i < ring_->size(); ++i)
            if (target->gen(i).degree != ring_->gen(i).degree)
                throw std::invalid_argument("relabel target ring has different grading");
        CoeffPoly out(target);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c);
        return out;
    }

    /// Substitute generator := 0 (drops every term containing it).
    CoeffPoly at_zero(std::string_view name) const {
        auto idx = ring_->find(name);
        if (!idx)
            throw std::invalid_argument("'" + std::string(name) + "' is not a ring generator");
        CoeffPoly out(ring_);
        for (const auto& [m, c] : terms_)
            if (m.exponent(static_cast<int>(*idx)) == 0) out.terms_.emplace(m, c);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const mpz_class& c = it->second;
            bool negative = c < 0;
            mpz_class mag = negative ? mpz_class(-c) : c;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            const auto& factors = it->first.factors();
            if (factors.empty()) {
                os << mag.get_str();
            } else {
                bool star = false;
                if (mag != 1) {
                    os << mag.get_str();
                    star = true;
                }
                for (const auto& [g, e] : factors) {
                    if (star) os << "*";
                    os << ring_->gen(g).name;
                    if (e != 1) os << "^" << e;
                    star = true;
                }
            }
        }
        return os.str();
    }

private:
    void check_ring(const CoeffPoly& other) const {
        if (ring_.get() != other.ring_.get() && !ring_->same(*other.ring_))
            throw std::invalid_argument("polynomials over mismatched ring declarations");
    }

    RingPtr ring_;
    TermMap terms_;
};

namespace detail {

struct Token {
    enum class Kind { integer, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) return {Token::Kind::end, "", start};
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            return {Token::Kind::integer, std::string(src_.substr(start, i_ - start)), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            return {Token::Kind::ident, std::string(src_.substr(start, i_ - start)), start};
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Kind::plus, "+", start};
            case '-': return {Token::Kind::minus, "-", start};
            case '*': return {Token::Kind::star, "*", start};
            case '^': return {Token::Kind::caret, "^", start};
            case '(': return {Token::Kind::lparen, "(", start};
            case ')': return {Token::Kind::rparen, ")", start};
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

class PolyParser {
public:
    PolyParser(std::string_view src, RingPtr ring)
        : lexer_(src), ring_(std::move(ring)) {
        advance();
    }

    CoeffPoly parse() {
        CoeffPoly p = expression();
        if (tok_.kind != Token::Kind::end)
            throw parse_error("unexpected trailing input '" + tok_.text + "'", tok_.pos);
        return p;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    bool accept(Token::Kind k) {
        if (tok_.kind != k) return false;
        advance();
        return true;
    }

    CoeffPoly expression() {
        bool negate = false;
        if (tok_.kind == Token::Kind::minus) {
            negate = true;
            advance();
        } else if (tok_.kind == Token::Kind::plus) {
            advance();
        }
        CoeffPoly p = term();
        if (negate) p = -p;
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            bool minus = tok_.kind == Token::Kind::minus;
            advance();
            CoeffPoly t = term();
            if (minus)
                p -= t;
            else
                p += t;
        }
        return p;
    }

    CoeffPoly term() {
        CoeffPoly p = factor();
        while (accept(Token::Kind::star)) p = p * factor();
        return p;
    }

    CoeffPoly factor() {
        CoeffPoly base = primary();
        if (accept(Token::Kind::caret)) {
            if (tok_.kind != Token::Kind::integer)
                throw parse_error("expected integer exponent", tok_.pos);
            long e = std::stol(tok_.text);
            if (e <= 0) throw parse_error("exponent must be positive", tok_.pos);
            advance();
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    CoeffPoly primary() {
        switch (tok_.kind) {
            case Token::Kind::integer: {
                mpz_class v(tok_.text);
                advance();
                return CoeffPoly::constant(ring_, std::move(v));
            }
            case Token::Kind::ident: {
                auto idx = ring_->find(tok_.text);
                if (!idx)
                    throw parse_error("'" + tok_.text + "' is not a ring generator", tok_.pos);
                std::string name = tok_.text;
                advance();
                return CoeffPoly::generator(ring_, name);
            }
            case Token::Kind::lparen: {
                advance();
                CoeffPoly p = expression();
                if (!accept(Token::Kind::rparen))
                    throw parse_error("expected ')'", tok_.pos);
                return p;
            }
            default:
                throw parse_error("expected integer, generator or '('", tok_.pos);
        }
    }

    Lexer lexer_;
    RingPtr ring_;
    Token tok_{Token::Kind::end, "", 0};
};

}  // namespace detail

/// Parse a polynomial over the declared generators. Grammar: integer
/// literals, generator names, + - * ^ with positive integer exponents,
/// parentheses; implicit multiplication is a syntax error.
inline CoeffPoly poly_parse(std::string_view src, RingPtr ring) {
    return detail::PolyParser(src, std::move(ring)).parse();
}

}  // namespace schubert
