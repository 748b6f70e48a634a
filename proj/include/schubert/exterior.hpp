#pragma once

// The free module M(p) with basis e^1..e^n, p = X^n + c1 X^{n-1} + ... + cn,
// and its exterior powers. Wedge monomials are kept in a canonical form:
// strictly increasing index tuples with indices reduced into 1..n.

#include "schubert/coeff_ring.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace schubert {

/// Strictly increasing tuple of positive integers labelling a wedge monomial.
class IndexTuple {
public:
    IndexTuple() = default;

    explicit IndexTuple(std::vector<int> indices) : idx_(std::move(indices)) {
        for (std::size_t j = 0; j < idx_.size(); ++j) {
            if (idx_[j] < 1) throw std::invalid_argument("index tuple entries must be >= 1");
            if (j > 0 && idx_[j - 1] >= idx_[j])
                throw std::invalid_argument("index tuple must be strictly increasing");
        }
    }

    /// The lowest tuple (1,2,...,k).
    static IndexTuple contiguous(int k) {
        std::vector<int> v(static_cast<std::size_t>(k));
        std::iota(v.begin(), v.end(), 1);
        return IndexTuple(std::move(v));
    }

    std::size_t length() const { return idx_.size(); }
    int operator[](std::size_t j) const { return idx_.at(j); }
    int back() const { return idx_.back(); }
    const std::vector<int>& indices() const { return idx_; }

    /// wt(I) = sum_j (i_j - j).
    int weight() const {
        int w = 0;
        for (std::size_t j = 0; j < idx_.size(); ++j) w += idx_[j] - static_cast<int>(j) - 1;
        return w;
    }

    bool operator==(const IndexTuple& o) const { return idx_ == o.idx_; }
    bool operator!=(const IndexTuple& o) const { return !(*this == o); }
    bool operator<(const IndexTuple& o) const { return idx_ < o.idx_; }

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < idx_.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(idx_[j]);
        }
        return s;
    }

private:
    std::vector<int> idx_;
};

class ModuleSpec;
using SpecPtr = std::shared_ptr<const ModuleSpec>;

/// The pair (n, p) plus the coefficient ring: either a finite-rank module
/// defined by the monic p, or the free module truncated at a caller-chosen
/// bound (indices past the bound fail loudly instead of reducing).
class ModuleSpec {
public:
    static SpecPtr finite(int n, std::vector<CoeffPoly> p_coeffs, RingPtr ring) {
        if (n < 1) throw std::invalid_argument("module rank must be >= 1");
        if (static_cast<int>(p_coeffs.size()) != n)
            throw std::invalid_argument("expected exactly n coefficients c1..cn");
        for (const auto& c : p_coeffs)
            if (!c.ring()->same(*ring))
                throw std::invalid_argument("p coefficient over mismatched ring");
        return std::shared_ptr<const ModuleSpec>(
            new ModuleSpec(n, false, std::move(p_coeffs), std::move(ring)));
    }

    /// p = X^n, trivial coefficient ring.
    static SpecPtr classical(int n) {
        RingPtr ring = RingDecl::make({});
        std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(n), CoeffPoly::zero(ring));
        return finite(n, std::move(coeffs), ring);
    }

    /// p = X^n + q over Z[q], with q graded in degree n.
    static SpecPtr quantum(int n) {
        RingPtr ring = RingDecl::make({{"q", n}});
        std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(n), CoeffPoly::zero(ring));
        coeffs.back() = CoeffPoly::generator(ring, "q");
        return finite(n, std::move(coeffs), ring);
    }

    /// p = X^n + c1 X^{n-1} + ... + cn with symbolic c_i of degree i.
    static SpecPtr generic(int n) {
        std::vector<Generator> gens;
        for (int i = 1; i <= n; ++i) gens.push_back({"c" + std::to_string(i), i});
        RingPtr ring = RingDecl::make(std::move(gens));
        std::vector<CoeffPoly> coeffs;
        for (int i = 1; i <= n; ++i)
            coeffs.push_back(CoeffPoly::generator(ring, "c" + std::to_string(i)));
        return finite(n, std::move(coeffs), ring);
    }

    /// p = 0: the free module, usable up to index `bound`.
    static SpecPtr free_truncated(int bound, RingPtr ring) {
        if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
        return std::shared_ptr<const ModuleSpec>(
            new ModuleSpec(bound, true, {}, std::move(ring)));
    }

    bool is_free() const { return free_; }

    /// Rank n of the finite module.
    int rank() const {
        if (free_) throw std::logic_error("free module spec has no finite rank");
        return n_;
    }

    /// Largest admissible basis index (n, or the truncation bound).
    int basis_bound() const { return n_; }

    const RingPtr& ring() const { return ring_; }
    const std::vector<CoeffPoly>& p_coeffs() const { return p_coeffs_; }

    bool same(const ModuleSpec& o) const {
        if (this == &o) return true;
        if (free_ != o.free_ || n_ != o.n_ || !ring_->same(*o.ring_)) return false;
        for (std::size_t i = 0; i < p_coeffs_.size(); ++i)
            if (p_coeffs_[i] != o.p_coeffs_[i]) return false;
        return true;
    }

    /// p as a polynomial over [X] ++ ring, or zero for the free module.
    CoeffPoly p_as_poly() const {
        RingPtr xring = x_extended_ring();
        CoeffPoly p = CoeffPoly::zero(xring);
        if (free_) return p;
        auto x = xring->find("X");
        p.add_term(Monomial::gen(static_cast<int>(*x), n_), 1);
        for (int i = 1; i <= n_; ++i) {
            const CoeffPoly& ci = p_coeffs_[static_cast<std::size_t>(i - 1)];
            CoeffPoly lifted = ci.mapped(xring);
            if (n_ - i > 0) {
                CoeffPoly xpow = CoeffPoly::zero(xring);
                xpow.add_term(Monomial::gen(static_cast<int>(*x), n_ - i), 1);
                lifted = lifted * xpow;
            }
            p += lifted;
        }
        return p;
    }

    /// Ring [X(1)] ++ coefficient generators, used to parse and print p.
    RingPtr x_extended_ring() const {
        std::vector<Generator> gens;
        gens.push_back({"X", 1});
        for (const auto& g : ring_->generators()) gens.push_back(g);
        return RingDecl::make(std::move(gens));
    }

    std::string p_str() const { return p_as_poly().str(); }

private:
    ModuleSpec(int n, bool free_module, std::vector<CoeffPoly> coeffs, RingPtr ring)
        : n_(n), free_(free_module), p_coeffs_(std::move(coeffs)), ring_(std::move(ring)) {}

    int n_;
    bool free_;
    std::vector<CoeffPoly> p_coeffs_;
    RingPtr ring_;
};

/// Element of the k-th exterior power in the canonical wedge basis.
class MultiVector {
public:
    MultiVector(SpecPtr spec, int k) : spec_(std::move(spec)), k_(k) {
        if (k < 0) throw std::invalid_argument("exterior degree must be >= 0");
    }

    static MultiVector basis(SpecPtr spec, IndexTuple I) {
        CoeffPoly one = CoeffPoly::constant(spec->ring(), 1);
        MultiVector v(spec, static_cast<int>(I.length()));
        v.add_term(std::move(I), std::move(one));
        return v;
    }

    const SpecPtr& spec() const { return spec_; }
    int k() const { return k_; }
    const std::map<IndexTuple, CoeffPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(IndexTuple I, CoeffPoly c) {
        if (static_cast<int>(I.length()) != k_)
            throw std::invalid_argument("index tuple length does not match exterior degree");
        if (I.length() > 0 && I.back() > spec_->basis_bound())
            throw std::invalid_argument("index tuple exceeds basis bound");
        if (!c.ring()->same(*spec_->ring()))
            throw std::invalid_argument("coefficient over mismatched ring");
        if (c.is_zero()) return;
        auto it = terms_.find(I);
        if (it == terms_.end()) {
            terms_.emplace(std::move(I), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiVector& operator+=(const MultiVector& o) {
        check_context(o);
        for (const auto& [I, c] : o.terms_) add_term(I, c);
        return *this;
    }

    MultiVector& operator-=(const MultiVector& o) {
        check_context(o);
        for (const auto& [I, c] : o.terms_) add_term(I, -c);
        return *this;
    }

    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }

    MultiVector operator-() const {
        MultiVector out(spec_, k_);
        for (const auto& [I, c] : terms_) out.terms_.emplace(I, -c);
        return out;
    }

    MultiVector scaled(const CoeffPoly& c) const {
        MultiVector out(spec_, k_);
        for (const auto& [I, v] : terms_) out.add_term(I, v * c);
        return out;
    }

    MultiVector scaled(const mpz_class& c) const {
        MultiVector out(spec_, k_);
        for (const auto& [I, v] : terms_) out.add_term(I, v.scaled(c));
        return out;
    }

    bool operator==(const MultiVector& o) const {
        if (k_ != o.k_ || !spec_->same(*o.spec_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second) return false;
        return true;
    }
    bool operator!=(const MultiVector& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [I, c] : terms_) {
            std::string label = k_ == 0 ? std::string("1") : "e(" + I.str() + ")";
            append_term(out, first, c, label);
            first = false;
        }
        return out;
    }

    /// Shared pretty-printer for coefficient-times-symbol sums.
    static void append_term(std::string& out, bool first, const CoeffPoly& c,
                            const std::string& label) {
        bool single = c.terms().size() == 1;
        if (single) {
            const auto& [m, v] = *c.terms().begin();
            bool neg = v < 0;
            mpz_class mag = neg ? mpz_class(-v) : v;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            CoeffPoly mono(c.ring());
            mono.add_term(m, mag);
            std::string ms = mono.str();
            if (label == "1") {
                out += ms;
            } else if (ms == "1") {
                out += label;
            } else {
                out += ms + "*" + label;
            }
        } else {
            out += first ? "" : " + ";
            if (label == "1")
                out += "(" + c.str() + ")";
            else
                out += "(" + c.str() + ")*" + label;
        }
    }

private:
    void check_context(const MultiVector& o) const {
        if (k_ != o.k_) throw std::invalid_argument("exterior degrees differ");
        if (!spec_->same(*o.spec_)) throw std::invalid_argument("module specs differ");
    }

    SpecPtr spec_;
    int k_;
    std::map<IndexTuple, CoeffPoly> terms_;
};

/// Expansion of e^m in the basis e^1..e^n: the identity for m <= n, and the
/// recursive substitution e^{n+j} = -(c1 e^{n+j-1} + ... + cn e^{j}) above.
inline MultiVector reduce_index(int m, const SpecPtr& spec) {
    if (m < 1) throw std::invalid_argument("basis index must be >= 1");
    if (spec->is_free()) {
        if (m > spec->basis_bound()) throw truncation_error(m, spec->basis_bound());
        return MultiVector::basis(spec, IndexTuple({m}));
    }
    const int n = spec->rank();
    if (m <= n) return MultiVector::basis(spec, IndexTuple({m}));
    // Horner walk: coords[j] = coefficient of e^{j+1} in X^d mod p.
    std::vector<CoeffPoly> coords(static_cast<std::size_t>(n), CoeffPoly::zero(spec->ring()));
    coords.back() = CoeffPoly::constant(spec->ring(), 1);
    for (int d = n + 1; d <= m; ++d) {
        CoeffPoly top = coords.back();
        for (int j = n - 1; j >= 1; --j) coords[static_cast<std::size_t>(j)] = coords[static_cast<std::size_t>(j - 1)];
        coords[0] = CoeffPoly::zero(spec->ring());
        if (!top.is_zero()) {
            for (int i = 1; i <= n; ++i)
                coords[static_cast<std::size_t>(n - i)] -= spec->p_coeffs()[static_cast<std::size_t>(i - 1)] * top;
        }
    }
    MultiVector out(spec, 1);
    for (int j = 1; j <= n; ++j) {
        const CoeffPoly& c = coords[static_cast<std::size_t>(j - 1)];
        if (!c.is_zero()) out.add_term(IndexTuple({j}), c);
    }
    return out;
}

namespace detail {

inline void normalize_rec(std::vector<int>& raw, const CoeffPoly& coeff, const SpecPtr& spec,
                          MultiVector& out) {
    for (std::size_t pos = 0; pos < raw.size(); ++pos) {
        if (raw[pos] > spec->basis_bound()) {
            MultiVector expansion = reduce_index(raw[pos], spec);
            int saved = raw[pos];
            for (const auto& [J, cj] : expansion.terms()) {
                raw[pos] = J[0];
                normalize_rec(raw, coeff * cj, spec, out);
            }
            raw[pos] = saved;
            return;
        }
    }
    // All indices are in range: sort, track the permutation sign, cancel repeats.
    std::vector<int> sorted = raw;
    int sign = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
            std::swap(sorted[j - 1], sorted[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1] == sorted[i]) return;
    out.add_term(IndexTuple(std::move(sorted)), sign > 0 ? coeff : -coeff);
}

}  // namespace detail

/// Canonical form of coeff * e^{r1} ^ ... ^ e^{rk} for an arbitrary raw tuple.
inline MultiVector normalize_wedge(const std::vector<int>& raw, const CoeffPoly& coeff,
                                   const SpecPtr& spec) {
    for (int r : raw)
        if (r < 1) throw std::invalid_argument("wedge index must be >= 1");
    if (!coeff.ring()->same(*spec->ring()))
        throw std::invalid_argument("coefficient over mismatched ring");
    MultiVector out(spec, static_cast<int>(raw.size()));
    if (coeff.is_zero()) return out;
    std::vector<int> work = raw;
    detail::normalize_rec(work, coeff, spec, out);
    return out;
}

/// Bilinear wedge product of canonical-form vectors.
inline MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    if (!a.spec()->same(*b.spec())) throw std::invalid_argument("module specs differ");
    MultiVector out(a.spec(), a.k() + b.k());
    for (const auto& [I, ci] : a.terms())
        for (const auto& [J, cj] : b.terms()) {
            std::vector<int> raw = I.indices();
            raw.insert(raw.end(), J.indices().begin(), J.indices().end());
            out += normalize_wedge(raw, ci * cj, a.spec());
        }
    return out;
}

/// Weight grading of a vector: wt(I) plus the coefficient's graded degree.
inline GradedDegree weight_degree(const MultiVector& v) {
    GradedDegree out;
    for (const auto& [I, c] : v.terms()) {
        GradedDegree gc = c.graded_degree();
        if (gc.kind == GradedDegree::Kind::inhomogeneous)
            return {GradedDegree::Kind::inhomogeneous, 0};
        int d = I.weight() + gc.value;
        if (out.kind == GradedDegree::Kind::any) {
            out.kind = GradedDegree::Kind::homogeneous;
            out.value = d;
        } else if (out.value != d) {
            return {GradedDegree::Kind::inhomogeneous, 0};
        }
    }
    return out;
}

}  // namespace schubert
