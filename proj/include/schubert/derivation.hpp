#pragma once

// The canonical Hasse-Schmidt derivation D = (D_0, D_1, ...) determined by
// D_h e^i = e^{i+h}: Leibniz-rule expansion (the brute-force oracle), the
// Pieri fast path, the inverse coefficients Dbar_h, and evaluation of
// operator polynomials P(D) on multivectors.

#include "schubert/schur.hpp"

namespace schubert {

/// All shift tuples P(I,h): H >= 0 with sum h and i_j + h_j < i_{j+1}.
inline std::vector<std::vector<int>> pieri_shifts(const IndexTuple& I, int h) {
    if (h < 0) throw std::invalid_argument("derivation order must be >= 0");
    const int k = static_cast<int>(I.length());
    std::vector<std::vector<int>> out;
    std::vector<int> H(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k) {
            if (rem == 0) out.push_back(H);
            return;
        }
        if (pos == k - 1) {
            H[static_cast<std::size_t>(pos)] = rem;
            self(self, pos + 1, 0);
            H[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        int gap = I[static_cast<std::size_t>(pos) + 1] - I[static_cast<std::size_t>(pos)] - 1;
        for (int s = 0; s <= std::min(rem, gap); ++s) {
            H[static_cast<std::size_t>(pos)] = s;
            self(self, pos + 1, rem - s);
        }
        H[static_cast<std::size_t>(pos)] = 0;
    };
    if (k == 0) {
        if (h == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, h);
    return out;
}

/// D_h on a wedge monomial by brute-force enumeration of all compositions
/// h_1 + ... + h_k = h. Exponential in k; retained as the testing oracle.
inline MultiVector leibniz_expand(int h, const IndexTuple& I, const SpecPtr& spec) {
    if (h < 0) throw std::invalid_argument("derivation order must be >= 0");
    const int k = static_cast<int>(I.length());
    MultiVector out(spec, k);
    CoeffPoly one = CoeffPoly::constant(spec->ring(), 1);
    if (k == 0) {
        if (h == 0) out.add_term(IndexTuple(), one);
        return out;
    }
    std::vector<int> raw(I.indices());
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k - 1) {
            raw[static_cast<std::size_t>(pos)] = I[static_cast<std::size_t>(pos)] + rem;
            out += normalize_wedge(raw, one, spec);
            return;
        }
        for (int s = 0; s <= rem; ++s) {
            raw[static_cast<std::size_t>(pos)] = I[static_cast<std::size_t>(pos)] + s;
            self(self, pos + 1, rem - s);
        }
    };
    rec(rec, 0, h);
    return out;
}

/// D_h on a wedge monomial via Pieri's formula: only the surviving shift
/// tuples are emitted, then out-of-range top indices are reduced mod p.
inline MultiVector pieri_expand(int h, const IndexTuple& I, const SpecPtr& spec) {
    const int k = static_cast<int>(I.length());
    MultiVector out(spec, k);
    CoeffPoly one = CoeffPoly::constant(spec->ring(), 1);
    if (k == 0) {
        if (h < 0) throw std::invalid_argument("derivation order must be >= 0");
        if (h == 0) out.add_term(IndexTuple(), one);
        return out;
    }
    for (const auto& H : pieri_shifts(I, h)) {
        std::vector<int> shifted(I.indices());
        for (int j = 0; j < k; ++j) shifted[static_cast<std::size_t>(j)] += H[static_cast<std::size_t>(j)];
        if (shifted.back() <= spec->basis_bound())
            out.add_term(IndexTuple(std::move(shifted)), one);
        else
            out += normalize_wedge(shifted, one, spec);
    }
    return out;
}

/// Linear extension of D_h.
inline MultiVector apply_D(int h, const MultiVector& v) {
    MultiVector out(v.spec(), v.k());
    for (const auto& [I, c] : v.terms()) out += pieri_expand(h, I, v.spec()).scaled(c);
    return out;
}

/// Dbar_h, the h-th inverse coefficient up to sign (D_t^{-1} = sum (-1)^i
/// Dbar_i t^i), via the recursion Dbar_h = sum_{j>=1} (-1)^{j+1} Dbar_{h-j} D_j.
inline MultiVector apply_Dbar(int h, const MultiVector& v) {
    if (h < 0) throw std::invalid_argument("derivation order must be >= 0");
    if (h == 0) return v;
    MultiVector out(v.spec(), v.k());
    for (int j = 1; j <= h; ++j) {
        MultiVector t = apply_Dbar(h - j, apply_D(j, v));
        if (j % 2 == 1)
            out += t;
        else
            out -= t;
    }
    return out;
}

/// Dbar_h as the Schur determinant Delta_{(2,3,...,h+1)}(T) over `ring`.
inline CoeffPoly dbar_operator_poly(int h, const RingPtr& ring, int slots) {
    if (h < 0) throw std::invalid_argument("derivation order must be >= 0");
    std::vector<int> idx;
    for (int i = 2; i <= h + 1; ++i) idx.push_back(i);
    return schur_delta(IndexTuple(std::move(idx)), ring, slots);
}

/// Dbar_h over the minimal ring T1..Th.
inline CoeffPoly dbar_operator_poly(int h) {
    if (h < 0) throw std::invalid_argument("derivation order must be >= 0");
    return dbar_operator_poly(h, make_operator_ring(h, "T"), h);
}

/// Evaluates P(D) on v, where the first `slots` generators of P's ring are
/// the operator symbols T_1..T_slots and the rest are coefficient symbols
/// resolved by name in v's ring. Operators apply in ascending index order.
inline MultiVector apply_operator_poly(const CoeffPoly& P, int slots, const MultiVector& v) {
    detail::check_operator_ring(P.ring(), slots);
    const RingPtr& target = v.spec()->ring();
    MultiVector out(v.spec(), v.k());
    for (const auto& [m, c] : P.terms()) {
        std::vector<std::pair<int, int>> ops;
        std::vector<std::pair<int, int>> base_factors;
        for (const auto& [g, e] : m.factors()) {
            if (g < slots) {
                ops.emplace_back(g + 1, e);
            } else {
                const std::string& name = P.ring()->gen(static_cast<std::size_t>(g)).name;
                auto idx = target->find(name);
                if (!idx)
                    throw std::invalid_argument("coefficient generator '" + name +
                                                "' not declared in the module ring");
                base_factors.emplace_back(static_cast<int>(*idx), e);
            }
        }
        CoeffPoly scale(target);
        scale.add_term(Monomial(std::move(base_factors)), c);
        MultiVector w = v.scaled(scale);
        for (const auto& [order, exp] : ops)
            for (int i = 0; i < exp; ++i) w = apply_D(order, w);
        out += w;
    }
    return out;
}

/// Giambelli evaluation Delta_I(D) e^1 ^ ... ^ e^k; equals the wedge basis
/// monomial on I whenever no reduction interferes.
inline MultiVector giambelli_vector(const IndexTuple& I, const SpecPtr& spec) {
    const int k = static_cast<int>(I.length());
    if (k > 0 && I.back() > spec->basis_bound())
        throw std::invalid_argument("index tuple exceeds basis bound");
    MultiVector start = MultiVector::basis(spec, IndexTuple::contiguous(k));
    if (k == 0) return start;
    int slots = I.back() - 1;
    CoeffPoly delta = schur_delta(I, make_operator_ring(slots, "T"), slots);
    return apply_operator_poly(delta, slots, start);
}

}  // namespace schubert
