#pragma once

// Partitions, their index-tuple labels, and Schur determinants
// Delta_I(T) = det[ T_{i_j - i} ] with T_0 = 1 and T_{<0} = 0.

#include "schubert/exterior.hpp"

#include <cstdint>
#include <unordered_map>

namespace schubert {

/// Weakly decreasing tuple of non-negative integers, trailing zeros stripped.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition parts must be >= 0");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    /// Accepts comma-separated parts; "" and "0" denote the empty partition.
    static Partition parse(std::string_view src) {
        std::vector<int> parts;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        };
        skip_ws();
        while (pos < src.size()) {
            if (!std::isdigit(static_cast<unsigned char>(src[pos])))
                throw parse_error("expected a partition part", pos);
            int value = 0;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                value = value * 10 + (src[pos] - '0');
                if (value > 1000000) throw parse_error("partition part too large", pos);
                ++pos;
            }
            parts.push_back(value);
            skip_ws();
            if (pos == src.size()) break;
            if (src[pos] != ',') throw parse_error("expected ','", pos);
            ++pos;
            skip_ws();
            if (pos == src.size()) throw parse_error("trailing ','", pos);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool is_empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

/// lambda -> (1 + lambda_k, 2 + lambda_{k-1}, ..., k + lambda_1).
inline IndexTuple partition_to_index(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<int>(lambda.length()) > k)
        throw std::invalid_argument("partition has more than k parts");
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = j + 1 + lambda.part(static_cast<std::size_t>(k - 1 - j));
    return IndexTuple(std::move(idx));
}

/// (i_1, ..., i_k) -> (i_k - k, ..., i_1 - 1).
inline Partition index_to_partition(const IndexTuple& I) {
    std::vector<int> parts;
    for (std::size_t j = I.length(); j-- > 0;)
        parts.push_back(I[j] - static_cast<int>(j) - 1);
    return Partition(std::move(parts));
}

/// Ring whose first `slots` generators are operator symbols prefix1..prefixN
/// of degree 1..N, followed by the base coefficient generators.
inline RingPtr make_operator_ring(int slots, const std::string& prefix, const RingPtr& base) {
    if (slots < 0) throw std::invalid_argument("slot count must be >= 0");
    std::vector<Generator> gens;
    for (int i = 1; i <= slots; ++i) gens.push_back({prefix + std::to_string(i), i});
    for (const auto& g : base->generators()) gens.push_back(g);
    return RingDecl::make(std::move(gens));
}

inline RingPtr make_operator_ring(int slots, const std::string& prefix) {
    return make_operator_ring(slots, prefix, RingDecl::make({}));
}

/// Length of the ring's operator prefix: leading generators named T1,T2,...
/// (or D1,D2,...) with degree i at position i.
inline int detect_operator_slots(const RingPtr& ring) {
    int s = 0;
    while (static_cast<std::size_t>(s) < ring->size()) {
        const Generator& g = ring->gen(static_cast<std::size_t>(s));
        std::string want = std::to_string(s + 1);
        if (g.degree != s + 1) break;
        if (g.name.size() != want.size() + 1) break;
        if (g.name[0] != 'T' && g.name[0] != 'D') break;
        if (g.name.compare(1, std::string::npos, want) != 0) break;
        ++s;
    }
    return s;
}

namespace detail {

inline void check_operator_ring(const RingPtr& ring, int slots) {
    if (slots < 0 || static_cast<std::size_t>(slots) > ring->size())
        throw std::invalid_argument("operator slot count exceeds ring size");
    for (int i = 1; i <= slots; ++i)
        if (ring->gen(static_cast<std::size_t>(i - 1)).degree != i)
            throw std::invalid_argument("operator slot " + std::to_string(i) +
                                        " does not have degree " + std::to_string(i));
}

/// det of the submatrix on `rows` (bitmask) and columns col0..k-1, where the
/// (r, c) entry is T_{I[c] - r}; memoized on (rows, col0).
class SchurDet {
public:
    SchurDet(const IndexTuple& I, const RingPtr& ring, int slots)
        : I_(I), ring_(ring), slots_(slots) {}

    CoeffPoly run() {
        int k = static_cast<int>(I_.length());
        return minor_det((1u << k) - 1u, 0);
    }

private:
    CoeffPoly entry(int r, int c) const {
        int t = I_[static_cast<std::size_t>(c)] - r;
        if (t < 0) return CoeffPoly::zero(ring_);
        if (t == 0) return CoeffPoly::constant(ring_, 1);
        if (t > slots_)
            throw std::invalid_argument("operator ring has too few slots for this determinant");
        CoeffPoly p(ring_);
        p.add_term(Monomial::gen(t - 1), 1);
        return p;
    }

    CoeffPoly minor_det(std::uint32_t rows, int col) {
        int k = static_cast<int>(I_.length());
        if (col == k) return CoeffPoly::constant(ring_, 1);
        std::uint64_t key = (static_cast<std::uint64_t>(rows) << 8) | static_cast<std::uint64_t>(col);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;
        CoeffPoly out = CoeffPoly::zero(ring_);
        int parity = 0;
        for (int r = 1; r <= k; ++r) {
            if (!(rows & (1u << (r - 1)))) continue;
            CoeffPoly e = entry(r, col);
            if (!e.is_zero()) {
                CoeffPoly sub = minor_det(rows & ~(1u << (r - 1)), col + 1);
                CoeffPoly contrib = e * sub;
                out += (parity % 2 == 0) ? contrib : -contrib;
            }
            ++parity;
        }
        memo_.emplace(key, out);
        return out;
    }

    const IndexTuple& I_;
    const RingPtr& ring_;
    int slots_;
    std::unordered_map<std::uint64_t, CoeffPoly> memo_;
};

}  // namespace detail

/// Delta_I(T) expanded over `ring`, whose first `slots` generators are the
/// operator symbols T_1..T_slots. Needs slots >= i_k - 1.
inline CoeffPoly schur_delta(const IndexTuple& I, const RingPtr& ring, int slots) {
    detail::check_operator_ring(ring, slots);
    if (I.length() > 31) throw std::invalid_argument("index tuple too long");
    if (I.length() == 0) return CoeffPoly::constant(ring, 1);
    return detail::SchurDet(I, ring, slots).run();
}

/// Delta_I(T) over the minimal pure operator ring T1..T_{i_k - 1}.
inline CoeffPoly schur_delta(const IndexTuple& I) {
    int slots = I.length() == 0 ? 0 : I.back() - 1;
    return schur_delta(I, make_operator_ring(slots, "T"), slots);
}

/// All partitions with at most `rows` parts, each part <= `cols`, of the given
/// weight, in descending lexicographic order.
inline std::vector<Partition> partitions_in_box(int rows, int cols, int weight) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part, int slots) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (slots == 0) return;
        int top = std::min(max_part, remaining);
        for (int p = top; p >= 1; --p) {
            if (p * slots < remaining) break;
            cur.push_back(p);
            self(self, remaining - p, p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, weight, cols, rows);
    return out;
}

}  // namespace schubert
