#pragma once

// Truncated inversion of the Dbar generating series, the relation
// polynomials Dtilde_{n-k+j}(D_k, p), and the resulting presentation
// A[D_1..D_k] / (relations) together with its canonical normal form.

#include "schubert/schubert_ring.hpp"

namespace schubert {

/// S[0..order] with (sum_m S[m] t^m) * (sum_{i<=k} (-1)^i Dbar_i(T) t^i) = 1.
/// The ring's first `slots` generators are T_1..T_slots with slots >= k.
inline std::vector<CoeffPoly> dtilde_series(int order, int k, const RingPtr& ring, int slots) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (slots < k) throw std::invalid_argument("operator ring needs at least k slots");
    std::vector<CoeffPoly> dbar;
    for (int i = 0; i <= k; ++i) dbar.push_back(dbar_operator_poly(i, ring, slots));
    std::vector<CoeffPoly> S;
    S.push_back(CoeffPoly::constant(ring, 1));
    for (int m = 1; m <= order; ++m) {
        CoeffPoly s = CoeffPoly::zero(ring);
        for (int i = 1; i <= std::min(m, k); ++i) {
            CoeffPoly contrib = dbar[static_cast<std::size_t>(i)] * S[static_cast<std::size_t>(m - i)];
            if (i % 2 == 1)
                s += contrib;
            else
                s -= contrib;
        }
        S.push_back(std::move(s));
    }
    return S;
}

/// Dtilde_j(T_k) over a caller-supplied operator ring.
inline CoeffPoly dtilde_poly(int j, int k, const RingPtr& ring, int slots) {
    if (j < 0) throw std::invalid_argument("series index must be >= 0");
    return dtilde_series(j, k, ring, slots).back();
}

/// Dtilde_j(T_k) over the plain ring T1..Tk.
inline CoeffPoly dtilde_poly(int j, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return dtilde_poly(j, k, make_operator_ring(k, "T"), k);
}

/// Relation j of the presentation: Dtilde_{n-k+j}(T_k) plus the p-correction
/// sum_i c_i Dtilde_{n-k+j-i}(T_k), over the ring T1..Tk ++ coefficients.
inline CoeffPoly relation_poly(int j, const SpecPtr& spec, int k) {
    if (j < 1) throw std::invalid_argument("relation index must be >= 1");
    if (spec->is_free()) throw std::invalid_argument("relations need a finite module");
    const int n = spec->rank();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range for this module");
    RingPtr ring = make_operator_ring(k, "T", spec->ring());
    const int deg = n - k + j;
    std::vector<CoeffPoly> S = dtilde_series(deg, k, ring, k);
    CoeffPoly out = S[static_cast<std::size_t>(deg)];
    for (int i = 1; i <= deg && i <= n; ++i) {
        CoeffPoly ci = spec->p_coeffs()[static_cast<std::size_t>(i - 1)].mapped(ring);
        out += ci * S[static_cast<std::size_t>(deg - i)];
    }
    return out;
}

/// Generators D1..Dk and the k relations of A*(/\^k M(p)).
struct PresentationResult {
    int k = 0;
    int n = 0;
    RingPtr coeff_ring;
    std::string p;
    RingPtr d_ring;
    std::vector<std::string> generators;
    std::vector<CoeffPoly> relations;

    std::string coeff_ring_str() const {
        if (coeff_ring->size() == 0) return "Z";
        std::string s = "Z[";
        for (std::size_t i = 0; i < coeff_ring->size(); ++i) {
            if (i) s += ",";
            s += coeff_ring->gen(i).name + ":" + std::to_string(coeff_ring->gen(i).degree);
        }
        return s + "]";
    }

    std::string text() const {
        std::ostringstream os;
        os << "k = " << k << ", n = " << n << "\n";
        os << "p = " << p << "\n";
        os << "A = " << coeff_ring_str() << "\n";
        os << "ring = A[";
        for (std::size_t i = 0; i < generators.size(); ++i)
            os << (i ? "," : "") << generators[i];
        os << "] / (";
        for (std::size_t i = 0; i < generators.size(); ++i)
            os << (i ? ", " : "") << "R" << i + 1;
        os << ")\n";
        for (std::size_t i = 0; i < relations.size(); ++i)
            os << "R" << i + 1 << " = " << relations[i].str() << "\n";
        return os.str();
    }
};

/// Computes the k relations in D1..Dk and packages them with ring metadata.
inline PresentationResult presentation(const SpecPtr& spec, int k) {
    if (spec->is_free()) throw std::invalid_argument("presentation needs a finite module");
    const int n = spec->rank();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range for this module");
    PresentationResult out;
    out.k = k;
    out.n = n;
    out.coeff_ring = spec->ring();
    out.p = spec->p_str();
    out.d_ring = make_operator_ring(k, "D", spec->ring());
    for (int i = 1; i <= k; ++i) out.generators.push_back("D" + std::to_string(i));
    for (int j = 1; j <= k; ++j)
        out.relations.push_back(relation_poly(j, spec, k).with_ring(out.d_ring));
    return out;
}

/// Canonical representative of P(D) + ker(ev): apply P(D) to e^1 ^ ... ^ e^k
/// and read the coordinates as Schur classes. P lies in the relation ideal
/// iff the result is zero. P's ring must start with its operator slots
/// (named T1,T2,... or D1,D2,...).
inline ClassCombination normal_form(const CoeffPoly& P, const SpecPtr& spec, int k) {
    MultiVector start = MultiVector::basis(spec, IndexTuple::contiguous(k));
    return vector_to_classes(apply_operator_poly(P, detect_operator_slots(P.ring()), start));
}

}  // namespace schubert
