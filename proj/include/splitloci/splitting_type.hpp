#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace splitloci {

// One run f^s of a splitting type: value f repeated s times (s >= 1).
struct Block {
    long long value;
    long long multiplicity;

    friend bool operator==(const Block& x, const Block& y) {
        return x.value == y.value && x.multiplicity == y.multiplicity;
    }
};

// A splitting type e = (e_1 <= ... <= e_r) of a vector bundle on P^1,
// kept together with its run-length block view (f_1^{s_1}, ..., f_l^{s_l}),
// f_1 < ... < f_l.  Immutable after construction.
class SplittingType {
public:
    static SplittingType from_entries(std::vector<long long> values) {
        if (values.empty())
            throw std::invalid_argument("empty splitting type");
        std::sort(values.begin(), values.end());
        return SplittingType(std::move(values));
    }

    const std::vector<long long>& entries() const noexcept { return entries_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    long long rank() const noexcept { return static_cast<long long>(entries_.size()); }

    long long degree() const noexcept {
        return std::accumulate(entries_.begin(), entries_.end(), 0LL);
    }

    std::size_t block_count() const noexcept { return blocks_.size(); }

    long long spread() const noexcept { return entries_.back() - entries_.front(); }

    SplittingType shifted(long long c) const {
        std::vector<long long> v = entries_;
        for (auto& x : v) x += c;
        return SplittingType(std::move(v));
    }

    friend bool operator==(const SplittingType& x, const SplittingType& y) {
        return x.entries_ == y.entries_;
    }
    friend bool operator!=(const SplittingType& x, const SplittingType& y) {
        return !(x == y);
    }
    // Lexicographic; used only for deterministic ordering of containers.
    friend bool operator<(const SplittingType& x, const SplittingType& y) {
        return x.entries_ < y.entries_;
    }

private:
    explicit SplittingType(std::vector<long long> sorted) : entries_(std::move(sorted)) {
        for (long long v : entries_) {
            if (!blocks_.empty() && blocks_.back().value == v)
                ++blocks_.back().multiplicity;
            else
                blocks_.push_back(Block{v, 1});
        }
    }

    std::vector<long long> entries_;
    std::vector<Block> blocks_;
};

// Codimension-one unbalancing of block i: f_i^{s_i} -> (f_i-1, f_i^{s_i-2}, f_i+1).
struct Degeneration {
    std::size_t block_index;  // 1-based
    SplittingType result;
};

// u(e) = dim H^1 End(O(e)) = sum_{i<j} max(0, e_j - e_i - 1);
// equals the codimension of the stratum of type e.
inline long long u_invariant(const SplittingType& e) {
    const auto& v = e.entries();
    long long u = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            u += std::max(0LL, v[j] - v[i] - 1);
    return u;
}

// Specialization order: lower <= upper iff equal rank and degree and every
// ascending partial sum of lower is <= the matching partial sum of upper.
inline bool dominates(const SplittingType& lower, const SplittingType& upper) {
    if (lower.rank() != upper.rank() || lower.degree() != upper.degree())
        return false;
    long long ps_lo = 0, ps_up = 0;
    for (std::size_t k = 0; k < lower.entries().size(); ++k) {
        ps_lo += lower.entries()[k];
        ps_up += upper.entries()[k];
        if (ps_lo > ps_up) return false;
    }
    return true;
}

// Block i admits an unbalancing move iff s_i >= 2 and the new values f_i - 1,
// f_i + 1 do not collide with (or jump past) the neighboring blocks.
inline bool block_admits_unbalancing(const SplittingType& e, std::size_t i /*1-based*/) {
    const auto& b = e.blocks();
    const Block& blk = b[i - 1];
    if (blk.multiplicity < 2) return false;
    if (i > 1 && !(b[i - 2].value + 1 < blk.value)) return false;
    if (i < b.size() && !(blk.value < b[i].value - 1)) return false;
    return true;
}

inline std::vector<std::size_t> valid_b_indices(const SplittingType& e) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= e.block_count(); ++i)
        if (block_admits_unbalancing(e, i)) out.push_back(i);
    return out;
}

inline std::vector<Degeneration> codim_one_degenerations(const SplittingType& e) {
    std::vector<Degeneration> out;
    for (std::size_t i = 1; i <= e.block_count(); ++i) {
        if (!block_admits_unbalancing(e, i)) continue;
        std::vector<long long> v;
        v.reserve(e.entries().size());
        for (std::size_t k = 0; k < e.block_count(); ++k) {
            const Block& blk = e.blocks()[k];
            if (k + 1 == i) {
                v.push_back(blk.value - 1);
                for (long long c = 0; c < blk.multiplicity - 2; ++c) v.push_back(blk.value);
                v.push_back(blk.value + 1);
            } else {
                for (long long c = 0; c < blk.multiplicity; ++c) v.push_back(blk.value);
            }
        }
        out.push_back(Degeneration{i, SplittingType::from_entries(std::move(v))});
    }
    return out;
}

namespace detail {

// All ascending tuples of length r with entries >= lo and fixed sum.
inline void ascending_tuples_rec(long long r, long long lo, long long sum,
                                 std::vector<long long>& acc,
                                 std::vector<std::vector<long long>>& out) {
    if (r == 1) {
        if (sum >= lo) {
            acc.push_back(sum);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    // next entry v: remaining r-1 entries are all >= v, so r*v <= sum.
    for (long long v = lo; v * r <= sum; ++v) {
        acc.push_back(v);
        ascending_tuples_rec(r - 1, v, sum - v, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// Every e' dominated by e with u(e') - u(e) <= max_codim, each exactly once,
// ordered by (u, entries).  Lowering the minimum entry by one raises u by at
// least one, so entries >= e_1 - max_codim bounds the search.
inline std::vector<SplittingType> enumerate_strata(const SplittingType& e, long long max_codim) {
    if (max_codim < 0) throw std::invalid_argument("negative codimension bound");
    const long long lo = e.entries().front() - max_codim;
    const long long budget = u_invariant(e) + max_codim;
    std::vector<std::vector<long long>> tuples;
    std::vector<long long> acc;
    detail::ascending_tuples_rec(e.rank(), lo, e.degree(), acc, tuples);
    std::vector<SplittingType> out;
    for (auto& t : tuples) {
        SplittingType cand = SplittingType::from_entries(std::move(t));
        if (u_invariant(cand) <= budget && dominates(cand, e)) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(), [](const SplittingType& x, const SplittingType& y) {
        long long ux = u_invariant(x), uy = u_invariant(y);
        if (ux != uy) return ux < uy;
        return x < y;
    });
    return out;
}

// Covering relations (lower -> upper) of the dominance order restricted to
// enumerate_strata(e, max_codim).
inline std::vector<std::pair<SplittingType, SplittingType>>
hasse_diagram(const SplittingType& e, long long max_codim) {
    const std::vector<SplittingType> nodes = enumerate_strata(e, max_codim);
    std::vector<std::pair<SplittingType, SplittingType>> edges;
    for (const auto& x : nodes) {
        for (const auto& y : nodes) {
            if (x == y || !dominates(x, y)) continue;
            bool covering = true;
            for (const auto& z : nodes) {
                if (z == x || z == y) continue;
                if (dominates(x, z) && dominates(z, y)) {
                    covering = false;
                    break;
                }
            }
            if (covering) edges.emplace_back(x, y);
        }
    }
    return edges;
}

// All shift-normalized types (f_1 = 0) with rank <= rank_max and
// spread <= spread_max, ordered by rank then lexicographically.
inline std::vector<SplittingType> enumerate_normalized_types(long long rank_max,
                                                             long long spread_max) {
    if (rank_max < 1 || spread_max < 0)
        throw std::invalid_argument("invalid enumeration bounds");
    std::vector<SplittingType> out;
    std::vector<long long> acc;
    auto rec = [&](auto&& self, long long remaining, long long prev) -> void {
        if (remaining == 0) {
            out.push_back(SplittingType::from_entries(acc));
            return;
        }
        for (long long v = prev; v <= spread_max; ++v) {
            acc.push_back(v);
            self(self, remaining - 1, v);
            acc.pop_back();
        }
    };
    for (long long r = 1; r <= rank_max; ++r) {
        acc.assign(1, 0);  // anchor f_1 = 0
        rec(rec, r - 1, 0);
        acc.clear();
    }
    return out;
}

// Same window but without anchoring the minimum at zero; includes shifted
// copies of the normalized list.
inline std::vector<SplittingType> enumerate_window_types(long long rank_max,
                                                         long long spread_max) {
    if (rank_max < 1 || spread_max < 0)
        throw std::invalid_argument("invalid enumeration bounds");
    std::vector<SplittingType> out;
    std::vector<long long> acc;
    auto rec = [&](auto&& self, long long remaining, long long prev) -> void {
        if (remaining == 0) {
            out.push_back(SplittingType::from_entries(acc));
            return;
        }
        for (long long v = prev; v <= spread_max; ++v) {
            acc.push_back(v);
            self(self, remaining - 1, v);
            acc.pop_back();
        }
    };
    for (long long r = 1; r <= rank_max; ++r)
        for (long long first = 0; first <= spread_max; ++first) {
            acc.assign(1, first);
            rec(rec, r - 1, first);
            acc.clear();
        }
    return out;
}

}  // namespace splitloci
