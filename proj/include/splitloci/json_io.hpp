#pragma once

#include <json.hpp>

#include "text_io.hpp"

namespace splitloci {

using nlohmann::json;

// Coefficients are emitted as JSON numbers while they fit 64 bits and as
// decimal strings beyond that.
inline json to_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(x.convert_to<long long>());
    return json(x.str());
}

inline json to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_json(x));
    return a;
}

inline json to_json(const SplittingType& e) {
    return json{{"entries", e.entries()}, {"type", to_string(e)}};
}

inline json to_json(const DivisorClass& c) {
    return json{{"a", to_json(c.a)}, {"b", to_json(c.b)}};
}

inline json to_json(const AbelianGroup& g) {
    return json{{"free_rank", g.free_rank},
                {"invariant_factors", to_json(g.invariant_factors)},
                {"display", to_string(g)}};
}

inline json to_json(const GorensteinVerdict& v) {
    json j{{"kind", to_string(v.kind)}, {"path", to_string(v.path)}, {"witness", v.witness}};
    if (v.kind == GorensteinKind::NGorenstein) j["min_N"] = v.min_n;
    return j;
}

inline json to_json(const CrosscheckReport& r) {
    return json{{"criterion", to_json(r.criterion)},
                {"class_group", to_json(r.class_group)},
                {"agree", r.agree}};
}

inline json to_json(const AffineModel& m) {
    return json{{"M", m.m_twist},
                {"D", m.d_twist},
                {"ambient_dim", m.ambient_dim},
                {"codim", m.codim},
                {"locus_dim", m.locus_dim}};
}

inline json to_json(const WeightBlock& w) {
    return json{{"i", w.source_block},
                {"j", w.target_block},
                {"dim", w.dimension},
                {"multidegree", w.multidegree}};
}

inline json to_json(const std::vector<WeightBlock>& ws) {
    json a = json::array();
    for (const WeightBlock& w : ws) a.push_back(to_json(w));
    return a;
}

}  // namespace splitloci
