#pragma once

// Ring arithmetic on the Schur-class basis of A*(/\^k M(p)): classes are
// labelled by partitions in the k x (n-k) box, products act through the
// evaluation map (operator polynomial applied to the lowest wedge).

#include "schubert/derivation.hpp"

namespace schubert {

/// Display and serialization order: heavier classes first, then
/// lexicographically larger part tuples first.
struct ClassOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = a.weight();
        int wb = b.weight();
        if (wa != wb) return wa > wb;
        return b.parts() < a.parts();
    }
};

inline int box_columns(const SpecPtr& spec, int k) {
    return spec->basis_bound() - k;
}

inline bool fits_box(const Partition& lambda, const SpecPtr& spec, int k) {
    if (static_cast<int>(lambda.length()) > k) return false;
    return lambda.part(0) <= box_columns(spec, k);
}

/// A single basis class sigma_lambda of A*(/\^k M(p)).
class SchubertClass {
public:
    SchubertClass(Partition lambda, int k, SpecPtr spec)
        : lambda_(std::move(lambda)), k_(k), spec_(std::move(spec)) {
        if (k_ < 1 || k_ > spec_->basis_bound())
            throw std::invalid_argument("k out of range for this module");
        if (!fits_box(lambda_, spec_, k_))
            throw std::invalid_argument("partition does not fit the " + std::to_string(k_) +
                                        " x " + std::to_string(box_columns(spec_, k_)) + " box");
    }

    const Partition& partition() const { return lambda_; }
    int k() const { return k_; }
    const SpecPtr& spec() const { return spec_; }
    IndexTuple index_tuple() const { return partition_to_index(lambda_, k_); }
    std::string str() const { return "σ(" + lambda_.str() + ")"; }

private:
    Partition lambda_;
    int k_;
    SpecPtr spec_;
};

/// A-linear combination of basis classes.
class ClassCombination {
public:
    using TermMap = std::map<Partition, CoeffPoly, ClassOrder>;

    ClassCombination(SpecPtr spec, int k) : spec_(std::move(spec)), k_(k) {
        if (k_ < 1 || k_ > spec_->basis_bound())
            throw std::invalid_argument("k out of range for this module");
    }

    static ClassCombination single(const SchubertClass& c) {
        ClassCombination out(c.spec(), c.k());
        out.add_term(c.partition(), CoeffPoly::constant(c.spec()->ring(), 1));
        return out;
    }

    const SpecPtr& spec() const { return spec_; }
    int k() const { return k_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Partition lambda, CoeffPoly c) {
        if (!fits_box(lambda, spec_, k_))
            throw std::logic_error("class outside the Grassmannian box");
        if (!c.ring()->same(*spec_->ring()))
            throw std::invalid_argument("coefficient over mismatched ring");
        if (c.is_zero()) return;
        auto it = terms_.find(lambda);
        if (it == terms_.end()) {
            terms_.emplace(std::move(lambda), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ClassCombination& operator+=(const ClassCombination& o) {
        check_context(o);
        for (const auto& [l, c] : o.terms_) add_term(l, c);
        return *this;
    }

    ClassCombination& operator-=(const ClassCombination& o) {
        check_context(o);
        for (const auto& [l, c] : o.terms_) add_term(l, -c);
        return *this;
    }

    friend ClassCombination operator+(ClassCombination a, const ClassCombination& b) { return a += b; }
    friend ClassCombination operator-(ClassCombination a, const ClassCombination& b) { return a -= b; }

    ClassCombination scaled(const CoeffPoly& c) const {
        ClassCombination out(spec_, k_);
        for (const auto& [l, v] : terms_) out.add_term(l, v * c);
        return out;
    }

    /// Coefficient of sigma_lambda (zero polynomial if absent).
    CoeffPoly coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? CoeffPoly::zero(spec_->ring()) : it->second;
    }

    bool operator==(const ClassCombination& o) const {
        if (k_ != o.k_ || !spec_->same(*o.spec_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second) return false;
        return true;
    }
    bool operator!=(const ClassCombination& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [l, c] : terms_) {
            MultiVector::append_term(out, first, c, "σ(" + l.str() + ")");
            first = false;
        }
        return out;
    }

private:
    void check_context(const ClassCombination& o) const {
        if (k_ != o.k_) throw std::invalid_argument("exterior degrees differ");
        if (!spec_->same(*o.spec_)) throw std::invalid_argument("module specs differ");
    }

    SpecPtr spec_;
    int k_;
    TermMap terms_;
};

/// sum coeff * wedge basis monomial on I(lambda).
inline MultiVector class_to_vector(const ClassCombination& c) {
    MultiVector out(c.spec(), c.k());
    for (const auto& [l, v] : c.terms())
        out.add_term(partition_to_index(l, c.k()), v);
    return out;
}

/// Reads wedge coordinates back as classes; exact inverse of class_to_vector.
inline ClassCombination vector_to_classes(const MultiVector& v) {
    ClassCombination out(v.spec(), v.k());
    for (const auto& [I, c] : v.terms()) out.add_term(index_to_partition(I), c);
    return out;
}

namespace detail {

inline void check_class_context(const SchubertClass& a, const SchubertClass& b) {
    if (a.k() != b.k()) throw std::invalid_argument("exterior degrees differ");
    if (!a.spec()->same(*b.spec())) throw std::invalid_argument("module specs differ");
}

}  // namespace detail

/// sigma_a * sigma_b: evaluates Delta_{I(a)}(D) on the wedge vector of b.
inline ClassCombination multiply_classes(const SchubertClass& a, const SchubertClass& b) {
    detail::check_class_context(a, b);
    IndexTuple I = a.index_tuple();
    int slots = I.back() - 1;
    CoeffPoly delta = schur_delta(I, make_operator_ring(slots, "T"), slots);
    MultiVector v = class_to_vector(ClassCombination::single(b));
    return vector_to_classes(apply_operator_poly(delta, slots, v));
}

/// Bilinear extension of multiply_classes.
inline ClassCombination multiply(const ClassCombination& a, const ClassCombination& b) {
    if (a.k() != b.k()) throw std::invalid_argument("exterior degrees differ");
    if (!a.spec()->same(*b.spec())) throw std::invalid_argument("module specs differ");
    ClassCombination out(a.spec(), a.k());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) {
            SchubertClass sa(la, a.k(), a.spec());
            SchubertClass sb(lb, b.k(), b.spec());
            out += multiply_classes(sa, sb).scaled(ca * cb);
        }
    return out;
}

/// D_h acting on a class: the Pieri product with the single-row class of
/// weight h, computed directly through the derivation.
inline ClassCombination pieri_on_class(int h, const SchubertClass& b) {
    MultiVector v = class_to_vector(ClassCombination::single(b));
    return vector_to_classes(apply_D(h, v));
}

/// One product row of the structure-constant table.
struct ProductEntry {
    Partition lhs;
    Partition rhs;
    ClassCombination result;
};

/// All products sigma_lhs * sigma_rhs over unordered pairs of box partitions
/// with |lhs| + |rhs| <= max_weight, heavier lhs, deterministic order.
inline std::vector<ProductEntry> structure_constants(const SpecPtr& spec, int k, int max_weight) {
    if (spec->is_free()) throw std::invalid_argument("structure constants need a finite module");
    if (max_weight < 0) throw std::invalid_argument("max weight must be >= 0");
    if (k < 1 || k > spec->rank()) throw std::invalid_argument("k out of range for this module");
    std::vector<Partition> box;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& l : partitions_in_box(k, box_columns(spec, k), w)) box.push_back(std::move(l));
    std::vector<ProductEntry> out;
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            if (box[i].weight() + box[j].weight() > max_weight) continue;
            SchubertClass a(box[i], k, spec);
            SchubertClass b(box[j], k, spec);
            out.push_back({box[i], box[j], multiply_classes(a, b)});
        }
    return out;
}

}  // namespace schubert
