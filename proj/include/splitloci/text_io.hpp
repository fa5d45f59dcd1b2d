#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "class_group.hpp"
#include "classifier.hpp"
#include "extension_space.hpp"
#include "splitting_type.hpp"

namespace splitloci {

inline std::string to_string(const SplittingType& e) {
    std::string s;
    for (std::size_t i = 0; i < e.entries().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.entries()[i]);
    }
    return s;
}

// "(-2)^1 (0)^1 (2)^1"
inline std::string block_form(const SplittingType& e) {
    std::string s;
    for (std::size_t i = 0; i < e.blocks().size(); ++i) {
        if (i) s += ' ';
        s += '(' + std::to_string(e.blocks()[i].value) + ")^" +
             std::to_string(e.blocks()[i].multiplicity);
    }
    return s;
}

// Comma-separated integers in any order, e.g. "2,-2,0"; whitespace tolerated.
inline SplittingType parse_splitting_type(std::string_view text) {
    std::vector<long long> values;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        const std::size_t first = token.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("invalid splitting type: \"" + std::string(text) + "\"");
        const std::size_t last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        long long v = 0;
        try {
            v = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid splitting type: \"" + std::string(text) + "\"");
        }
        if (pos != token.size())
            throw std::invalid_argument("invalid splitting type: \"" + std::string(text) + "\"");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("empty splitting type");
    return SplittingType::from_entries(std::move(values));
}

inline std::string to_string(const std::vector<Int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s + "]";
}

// "a=[4,0,-4] b=[0,0,0]"
inline std::string to_string(const DivisorClass& c) {
    return "a=" + to_string(c.a) + " b=" + to_string(c.b);
}

// "Z ⊕ Z/3", "Z^2", "Z/5", "0" for the trivial group.
inline std::string to_string(const AbelianGroup& g) {
    std::vector<std::string> parts;
    if (g.free_rank == 1) parts.push_back("Z");
    else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
    for (const Int& d : g.invariant_factors) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

inline std::string to_string(const std::optional<Int>& order) {
    return order ? order->str() : "∞";
}

inline std::string to_string(GorensteinKind k) {
    switch (k) {
        case GorensteinKind::Gorenstein: return "gorenstein";
        case GorensteinKind::NGorenstein: return "N-gorenstein";
        case GorensteinKind::NotQGorenstein: return "not-Q-gorenstein";
    }
    return "?";
}

// "gorenstein", "N-gorenstein:N=5", "not-Q-gorenstein"
inline std::string to_string(const GorensteinVerdict& v) {
    if (v.kind == GorensteinKind::NGorenstein)
        return "N-gorenstein:N=" + std::to_string(v.min_n);
    return to_string(v.kind);
}

inline std::string to_string(VerdictPath p) {
    return p == VerdictPath::Criterion ? "criterion" : "class_group";
}

// TSV rows "i<TAB>j<TAB>dim<TAB>multidegree", multidegree comma-separated.
inline std::string weights_tsv(const std::vector<WeightBlock>& weights, bool header = true) {
    std::string s;
    if (header) s += "i\tj\tdim\tmultidegree\n";
    for (const WeightBlock& w : weights) {
        s += std::to_string(w.source_block) + '\t' + std::to_string(w.target_block) + '\t' +
             std::to_string(w.dimension) + '\t';
        for (std::size_t i = 0; i < w.multidegree.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(w.multidegree[i]);
        }
        s += '\n';
    }
    return s;
}

// DOT digraph of the strata poset under e, nodes labeled
// "e | u=<u> | <verdict>", edges the covering relations.
inline std::string poset_dot(const SplittingType& e, long long max_codim) {
    const auto nodes = enumerate_strata(e, max_codim);
    const auto edges = hasse_diagram(e, max_codim);
    std::string s = "digraph strata {\n  node [shape=box];\n";
    for (const auto& n : nodes) {
        s += "  \"" + to_string(n) + "\" [label=\"" + to_string(n) +
             " | u=" + std::to_string(u_invariant(n)) + " | " + to_string(classify(n)) +
             "\"];\n";
    }
    for (const auto& [lo, up] : edges)
        s += "  \"" + to_string(lo) + "\" -> \"" + to_string(up) + "\";\n";
    return s + "}\n";
}

}  // namespace splitloci
