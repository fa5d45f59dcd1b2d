#pragma once

#include <optional>
#include <string>
#include <vector>

#include "class_group.hpp"
#include "splitting_type.hpp"

namespace splitloci {

enum class GorensteinKind { Gorenstein, NGorenstein, NotQGorenstein };
enum class VerdictPath { Criterion, ClassGroup };

struct GorensteinVerdict {
    GorensteinKind kind;
    // 1 for Gorenstein, the minimal N >= 2 for NGorenstein, 0 otherwise.
    long long min_n;
    VerdictPath path;
    std::string witness;

    bool same_verdict(const GorensteinVerdict& o) const {
        return kind == o.kind && min_n == o.min_n;
    }
};

// One way e can be a shift of (0^s, t^s, ..., ((m-1)t)^s).  A constant tuple
// matches (r, t) for every t >= 0; that family is reported with difference
// unset instead of being enumerated.
struct BlockApMatch {
    long long size;
    std::optional<long long> difference;
};

inline bool matches_block_ap(const SplittingType& e, long long s, long long t) {
    if (s < 1 || t < 0) return false;
    const auto& blocks = e.blocks();
    if (blocks.size() == 1) return s == e.rank() || (t == 0 && e.rank() % s == 0);
    if (t == 0) return false;  // distinct values need a positive difference
    for (const Block& b : blocks)
        if (b.multiplicity != s) return false;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i + 1].value - blocks[i].value != t) return false;
    return true;
}

inline std::vector<BlockApMatch> block_ap_matches(const SplittingType& e) {
    const auto& blocks = e.blocks();
    std::vector<BlockApMatch> out;
    if (blocks.size() == 1) {
        const long long r = e.rank();
        out.push_back(BlockApMatch{r, std::nullopt});
        for (long long s = 1; s <= r; ++s)
            if (r % s == 0) out.push_back(BlockApMatch{s, 0});
        return out;
    }
    const long long s = blocks.front().multiplicity;
    const long long t = blocks[1].value - blocks[0].value;
    if (matches_block_ap(e, s, t)) out.push_back(BlockApMatch{s, t});
    return out;
}

inline std::optional<long long> min_block_ap_difference(const SplittingType& e) {
    if (e.block_count() == 1) return 0;
    const auto m = block_ap_matches(e);
    if (m.empty()) return std::nullopt;
    return m.front().difference;
}

// Consecutive block values with multiplicities alternating between two
// positive integers: a shift of (..., 0^a, 1^b, 2^a, 3^b, ...).
// A single block counts as contiguous.
inline bool is_contiguous(const SplittingType& e) {
    const auto& blocks = e.blocks();
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i + 1].value != blocks[i].value + 1) return false;
    for (std::size_t i = 2; i < blocks.size(); ++i)
        if (blocks[i].multiplicity != blocks[i - 2].multiplicity) return false;
    return true;
}

// Difference of e as an honest arithmetic progression (all multiplicities 1);
// a single entry counts as a progression of difference 0.
inline std::optional<long long> ap_difference(const SplittingType& e) {
    const auto& blocks = e.blocks();
    if (blocks.size() == 1)
        return e.rank() == 1 ? std::optional<long long>(0) : std::nullopt;
    for (const Block& b : blocks)
        if (b.multiplicity != 1) return std::nullopt;
    const long long t = blocks[1].value - blocks[0].value;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i + 1].value - blocks[i].value != t) return std::nullopt;
    return t;
}

// Closed-form classification: Gorenstein iff block AP of difference 0, 1 or 2
// or contiguous; N-Gorenstein (N = t for odd t, t/2 for even t) iff an
// arithmetic progression of difference t >= 3; not Q-Gorenstein otherwise.
inline GorensteinVerdict classify(const SplittingType& e) {
    const std::optional<long long> bt = min_block_ap_difference(e);
    if (bt && *bt <= 2) {
        std::string w = "block arithmetic progression, difference " + std::to_string(*bt);
        return {GorensteinKind::Gorenstein, 1, VerdictPath::Criterion, std::move(w)};
    }
    if (is_contiguous(e))
        return {GorensteinKind::Gorenstein, 1, VerdictPath::Criterion, "contiguous"};
    if (const std::optional<long long> t = ap_difference(e); t && *t >= 3) {
        const long long n = (*t % 2 == 0) ? *t / 2 : *t;
        std::string w = "arithmetic progression, difference " + std::to_string(*t);
        return {GorensteinKind::NGorenstein, n, VerdictPath::Criterion, std::move(w)};
    }
    return {GorensteinKind::NotQGorenstein, 0, VerdictPath::Criterion, "no matching pattern"};
}

// Independent route: the torsion order of the canonical class in the class
// group of the affine model.
inline GorensteinVerdict classify_via_class_group(const SplittingType& e) {
    const std::optional<Int> order = element_order(e, canonical_class(e));
    if (!order)
        return {GorensteinKind::NotQGorenstein, 0, VerdictPath::ClassGroup,
                "canonical class has infinite order"};
    if (*order == 1)
        return {GorensteinKind::Gorenstein, 1, VerdictPath::ClassGroup,
                "canonical class order 1"};
    return {GorensteinKind::NGorenstein, order->convert_to<long long>(),
            VerdictPath::ClassGroup, "canonical class order " + order->str()};
}

// Difference profiles of block values and of the delta vector; the canonical
// class is torsion exactly when these are proportional (see classify).
struct ProportionalityDiagnostic {
    std::vector<long long> delta_f;
    std::vector<long long> delta_delta;  // (s_1+s_2, ..., s_{l-1}+s_l)
    bool proportional;
    std::optional<Rat> ratio;  // lowest terms, present when proportional
};

inline ProportionalityDiagnostic proportionality_diagnostic(const SplittingType& e) {
    const auto& blocks = e.blocks();
    if (blocks.size() < 2) throw std::invalid_argument("no consecutive blocks");
    ProportionalityDiagnostic d;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        d.delta_f.push_back(blocks[i + 1].value - blocks[i].value);
        d.delta_delta.push_back(blocks[i].multiplicity + blocks[i + 1].multiplicity);
    }
    d.proportional = true;
    for (std::size_t i = 1; i < d.delta_f.size(); ++i)
        if (Int(d.delta_delta[i]) * d.delta_f[0] != Int(d.delta_delta[0]) * d.delta_f[i])
            d.proportional = false;
    if (d.proportional) d.ratio = Rat(d.delta_delta[0], d.delta_f[0]);
    return d;
}

struct CrosscheckReport {
    GorensteinVerdict criterion;
    GorensteinVerdict class_group;
    bool agree;
};

inline CrosscheckReport crosscheck(const SplittingType& e) {
    CrosscheckReport r{classify(e), classify_via_class_group(e), false};
    r.agree = r.criterion.same_verdict(r.class_group);
    return r;
}

}  // namespace splitloci
