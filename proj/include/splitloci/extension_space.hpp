#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "splitting_type.hpp"

namespace splitloci {

// The affine model for the splitting locus of e: the extension space of
// O(D) by O(-M)^{r-1}, with the locus sitting in codimension u(e).
struct AffineModel {
    long long m_twist;      // M
    long long d_twist;      // D = deg e + (r-1) M
    long long ambient_dim;  // (r-1)(M+D-1) = u of the model type
    long long codim;        // u(e)
    long long locus_dim;    // ambient_dim - codim
};

namespace detail {

inline SplittingType model_type(const SplittingType& e, long long m) {
    std::vector<long long> v(static_cast<std::size_t>(e.rank() - 1), -m);
    v.push_back(e.degree() + (e.rank() - 1) * m);
    return SplittingType::from_entries(std::move(v));
}

// Admissibility for the model chooser: every proper partial sum of the model
// type strictly below that of e (total degrees equal), D above e_r and above
// the dominance threshold e_r + sum_{i=2}^{r-1}(e_i - e_1).
inline bool model_admissible(const SplittingType& e, long long m) {
    const long long r = e.rank();
    const long long d_twist = e.degree() + (r - 1) * m;
    const SplittingType cand = model_type(e, m);
    if (cand.degree() != e.degree()) return false;
    long long ps_lo = 0, ps_up = 0;
    for (std::size_t k = 0; k + 1 < cand.entries().size(); ++k) {
        ps_lo += cand.entries()[k];
        ps_up += e.entries()[k];
        if (ps_lo >= ps_up) return false;
    }
    const long long top = e.entries().back();
    if (d_twist <= top) return false;
    long long threshold = top;
    for (std::size_t i = 1; i + 1 < e.entries().size(); ++i)
        threshold += e.entries()[i] - e.entries().front();
    return d_twist >= threshold;
}

}  // namespace detail

// Smallest admissible M, bumped by slack; any admissible M presents the same
// class group, so minimality is only a reproducibility convention.
inline AffineModel choose_affine_model(const SplittingType& e, long long slack = 0) {
    if (e.rank() < 2) throw std::invalid_argument("no extension-space model");
    if (slack < 0) throw std::invalid_argument("negative slack");
    long long m = -e.entries().front() - 2;
    while (!detail::model_admissible(e, m)) ++m;
    m += slack;
    const long long r = e.rank();
    const long long d_twist = e.degree() + (r - 1) * m;
    AffineModel model;
    model.m_twist = m;
    model.d_twist = d_twist;
    model.ambient_dim = (r - 1) * (m + d_twist - 1);
    model.codim = u_invariant(e);
    model.locus_dim = model.ambient_dim - model.codim;
    return model;
}

// One weight space of the torus action on H^1 End(O(e)) per pair of blocks
// j < i, of dimension s_i s_j (f_i - f_j - 1) and multidegree
// unit(j) + ... + unit(i-1) in Z^{l-1}.
struct WeightBlock {
    std::size_t source_block;  // i (1-based)
    std::size_t target_block;  // j < i
    long long dimension;
    std::vector<long long> multidegree;  // length l-1
};

// Zero-dimensional weight spaces (adjacent block values) are omitted; the
// recorded dimensions add up to u(e).
inline std::vector<WeightBlock> torus_weights(const SplittingType& e) {
    const auto& blocks = e.blocks();
    const std::size_t l = blocks.size();
    std::vector<WeightBlock> out;
    if (l < 2) return out;
    for (std::size_t gap = 1; gap < l; ++gap) {
        for (std::size_t j = 1; j + gap <= l; ++j) {
            const std::size_t i = j + gap;
            const Block& bi = blocks[i - 1];
            const Block& bj = blocks[j - 1];
            const long long dim = bi.multiplicity * bj.multiplicity * (bi.value - bj.value - 1);
            if (dim == 0) continue;
            WeightBlock w{i, j, dim, std::vector<long long>(l - 1, 0)};
            for (std::size_t p = j; p < i; ++p) w.multidegree[p - 1] = 1;
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace splitloci
