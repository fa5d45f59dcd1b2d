#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "int_matrix.hpp"
#include "splitting_type.hpp"

namespace splitloci {

// Integer vector over the divisor-class basis a_1^{(1)}..a_1^{(l)},
// b_2^{(1)}..b_2^{(l)}.  Coefficients of b_2^{(i)} must vanish whenever the
// unbalancing move at block i does not exist (the class itself is zero there).
struct DivisorClass {
    std::vector<Int> a;
    std::vector<Int> b;

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        DivisorClass r = x;
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
        for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        DivisorClass r = x;
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
        for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] -= y.b[i];
        return r;
    }
    friend DivisorClass operator*(const Int& c, const DivisorClass& x) {
        DivisorClass r = x;
        for (auto& t : r.a) t *= c;
        for (auto& t : r.b) t *= c;
        return r;
    }
};

inline bool respects_b_support(const SplittingType& e, const DivisorClass& c) {
    if (c.a.size() != e.block_count() || c.b.size() != e.block_count()) return false;
    for (std::size_t i = 1; i <= e.block_count(); ++i)
        if (!block_admits_unbalancing(e, i) && c.b[i - 1] != 0) return false;
    return true;
}

// The two classes killed when passing from the universal locus to its model
// inside the extension space of ((-M)^{r-1}, D), D = deg e + (r-1)M.
struct RelationLattice {
    DivisorClass alpha1;
    DivisorClass alpha2;
    long long m_parameter;
};

// Presentation of a finitely generated abelian group Z^n / L.
// basis_transform is unimodular and takes ambient coordinates to the
// diagonalizing basis; in that basis the relation lattice is generated by
// d_i * unit(i) where the d_i are read off diagonal():
// first the trivial factors (1), then invariant_factors, then zeros (free).
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<Int> invariant_factors;  // each > 1, ascending divisibility
    IntMatrix basis_transform;

    std::size_t ambient_dim() const { return basis_transform.rows(); }

    std::vector<Int> diagonal() const {
        const std::size_t n = ambient_dim();
        std::vector<Int> d(n, 0);
        const std::size_t ones = n - static_cast<std::size_t>(free_rank) - invariant_factors.size();
        for (std::size_t i = 0; i < ones; ++i) d[i] = 1;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) d[ones + i] = invariant_factors[i];
        return d;
    }

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }

    bool presentation_equal(const AbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
};

// delta_i = sum_{j<i} s_j - sum_{j>i} s_j.
inline std::vector<long long> delta_vector(const SplittingType& e) {
    const auto& blocks = e.blocks();
    std::vector<long long> delta(blocks.size());
    long long before = 0, after = e.rank();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        after -= blocks[i].multiplicity;
        delta[i] = before - after;
        before += blocks[i].multiplicity;
    }
    return delta;
}

// Class of the canonical module of the splitting locus in its affine model
// (the ambient is an affine space, so no ambient term appears):
// a_i = deg e - r f_i + delta_i, b_i = r - s_i at supported indices.
inline DivisorClass canonical_class(const SplittingType& e) {
    const auto& blocks = e.blocks();
    const long long r = e.rank(), d = e.degree();
    const std::vector<long long> delta = delta_vector(e);
    DivisorClass c{std::vector<Int>(blocks.size()), std::vector<Int>(blocks.size())};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        c.a[i] = d - r * blocks[i].value + delta[i];
        if (block_admits_unbalancing(e, i + 1)) c.b[i] = r - blocks[i].multiplicity;
    }
    return c;
}

// alpha_1 = sum(-(f_i+M) a_1^{(i)} + b_2^{(i)}),
// alpha_2 = sum((f_i+M+1) a_1^{(i)} - b_2^{(i)}), b-terms zeroed off-support.
// Requires the model type ((-M)^{r-1}, D) to be strictly dominated by e.
inline RelationLattice relation_classes(const SplittingType& e, long long m) {
    std::vector<long long> model(static_cast<std::size_t>(e.rank() - 1), -m);
    model.push_back(e.degree() + (e.rank() - 1) * m);
    const SplittingType check = SplittingType::from_entries(std::move(model));
    if (!dominates(check, e) || check == e)
        throw std::invalid_argument("affine model does not dominate");

    const auto& blocks = e.blocks();
    RelationLattice rel{{std::vector<Int>(blocks.size()), std::vector<Int>(blocks.size())},
                        {std::vector<Int>(blocks.size()), std::vector<Int>(blocks.size())},
                        m};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        rel.alpha1.a[i] = -(blocks[i].value + m);
        rel.alpha2.a[i] = blocks[i].value + m + 1;
        if (block_admits_unbalancing(e, i + 1)) {
            rel.alpha1.b[i] = 1;
            rel.alpha2.b[i] = -1;
        }
    }
    return rel;
}

// M-free generators of the same lattice: sum a_1^{(i)} and
// sum(f_i a_1^{(i)} - b_2^{(i)}).
inline std::pair<DivisorClass, DivisorClass> reduced_relations(const SplittingType& e) {
    const auto& blocks = e.blocks();
    DivisorClass r1{std::vector<Int>(blocks.size()), std::vector<Int>(blocks.size())};
    DivisorClass r2{std::vector<Int>(blocks.size()), std::vector<Int>(blocks.size())};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        r1.a[i] = 1;
        r2.a[i] = blocks[i].value;
        if (block_admits_unbalancing(e, i + 1)) r2.b[i] = -1;
    }
    return {r1, r2};
}

// Ambient coordinates: a_1^{(1)}..a_1^{(l)} followed by the supported
// b_2^{(i)} in ascending block order.
inline std::vector<Int> ambient_vector(const SplittingType& e, const DivisorClass& c) {
    std::vector<Int> v(c.a.begin(), c.a.end());
    for (std::size_t i : valid_b_indices(e)) v.push_back(c.b[i - 1]);
    return v;
}

inline AbelianGroup present_quotient(const std::vector<std::vector<Int>>& relations,
                                     std::size_t ambient_dim) {
    IntMatrix rel(relations.size(), ambient_dim);
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (relations[i].size() != ambient_dim)
            throw std::invalid_argument("relation length does not match ambient dimension");
        for (std::size_t j = 0; j < ambient_dim; ++j) rel(i, j) = relations[i][j];
    }
    SmithDecomposition snf = smith_normal_form(rel);
    AbelianGroup g;
    g.basis_transform = snf.v.transposed();
    std::size_t nonzero = 0;
    const std::size_t q = relations.size() < ambient_dim ? relations.size() : ambient_dim;
    for (std::size_t t = 0; t < q; ++t) {
        const Int& d = snf.s(t, t);
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) g.invariant_factors.push_back(d);
    }
    g.free_rank = static_cast<long long>(ambient_dim - nonzero);
    return g;
}

// A^1 of the splitting locus in its affine model: Z^{l+k} modulo the two
// reduced relations (k = number of supported b-indices).
inline AbelianGroup quotient_group(const SplittingType& e) {
    auto [r1, r2] = reduced_relations(e);
    return present_quotient({ambient_vector(e, r1), ambient_vector(e, r2)},
                            e.block_count() + valid_b_indices(e).size());
}

// Order of [x] in the presented quotient; nullopt means infinite order.
// In the diagonalizing basis coordinate y_i is constrained mod d_i, so the
// order is lcm(d_i / gcd(d_i, y_i)) provided all free coordinates vanish.
inline std::optional<Int> order_in(const AbelianGroup& g, const std::vector<Int>& ambient) {
    const std::vector<Int> y = apply(g.basis_transform, ambient);
    const std::vector<Int> d = g.diagonal();
    Int order = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (d[i] == 0) {
            if (y[i] != 0) return std::nullopt;
            continue;
        }
        Int gc = boost::multiprecision::gcd(d[i], y[i]);
        order = boost::multiprecision::lcm(order, Int(d[i] / gc));
    }
    return order;
}

// Minimal N >= 1 with N*c inside the relation lattice; N = 1 iff c itself
// lies in the lattice; nullopt if no power does.
inline std::optional<Int> element_order(const SplittingType& e, const DivisorClass& c) {
    if (!respects_b_support(e, c))
        throw std::invalid_argument("divisor class does not respect b support");
    return order_in(quotient_group(e), ambient_vector(e, c));
}

// c_1 of the pushforward of the i-th graded piece twisted by M:
// (M+1) a_1^{(i)} - b_2^{(i)}, with the b-term zeroed off-support.
inline DivisorClass c1_pushforward_twist(const SplittingType& e, std::size_t i, long long m) {
    if (i < 1 || i > e.block_count()) throw std::invalid_argument("block index out of range");
    DivisorClass c{std::vector<Int>(e.block_count()), std::vector<Int>(e.block_count())};
    c.a[i - 1] = m + 1;
    if (block_admits_unbalancing(e, i)) c.b[i - 1] = -1;
    return c;
}

}  // namespace splitloci
