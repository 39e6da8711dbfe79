#pragma once

// JSON forms of group specs, subgroup descriptors, data, spectra and reports.
// Rationals are "p/q" strings; output objects keep a fixed key order.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "datum.hpp"
#include "error.hpp"
#include "spectral.hpp"
#include "subgroups.hpp"

namespace dimdatum {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline const json &require(const json &obj, const char *key, const std::string &what) {
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(what + ": missing field '" + key + "'");
    return obj.at(key);
}

inline std::int64_t as_int(const json &v, const std::string &what) {
    if (!v.is_number_integer())
        throw InputError(what + ": expected an integer");
    return v.get<std::int64_t>();
}

inline Rational as_rational(const json &v, const std::string &what) {
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw InputError(what + ": expected a rational as \"p/q\"");
}

inline IntMatrix as_int_matrix(const json &v, const std::string &what) {
    if (!v.is_array())
        throw InputError(what + ": expected a matrix (array of rows)");
    IntMatrix m;
    for (const auto &row : v) {
        if (!row.is_array())
            throw InputError(what + ": matrix rows must be arrays");
        Weight r;
        for (const auto &x : row)
            r.push_back(as_int(x, what));
        m.push_back(std::move(r));
    }
    return m;
}

inline Weight as_weight(const json &v, const std::string &what) {
    if (!v.is_array())
        throw InputError(what + ": expected an integer array");
    Weight w;
    for (const auto &x : v)
        w.push_back(as_int(x, what));
    return w;
}

inline TorusElement as_torus_element(const json &v, const std::string &what) {
    if (!v.is_array())
        throw InputError(what + ": expected an array of turn fractions");
    std::vector<Rational> angles;
    for (const auto &x : v)
        angles.push_back(as_rational(x, what));
    return TorusElement(std::move(angles));
}

inline ordered_json torus_element_json(const TorusElement &t) {
    ordered_json a = ordered_json::array();
    for (const auto &x : t.angles())
        a.push_back(to_string(x));
    return a;
}

} // namespace detail

inline std::vector<FactorSpec> parse_group_spec(const json &j) {
    const json &factors = detail::require(j, "factors", "group");
    if (!factors.is_array() || factors.empty())
        throw InputError("group: 'factors' must be a non-empty array");
    std::vector<FactorSpec> spec;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string what = "group factor " + std::to_string(i);
        const json &t = detail::require(factors[i], "type", what);
        if (!t.is_string())
            throw InputError(what + ": 'type' must be a string");
        const std::string type = t.get<std::string>();
        const std::int64_t rank = detail::as_int(detail::require(factors[i], "rank", what), what);
        FactorType ft;
        if (type == "A")
            ft = FactorType::A;
        else if (type == "B")
            ft = FactorType::B;
        else if (type == "C")
            ft = FactorType::C;
        else if (type == "D")
            ft = FactorType::D;
        else if (type == "torus")
            ft = FactorType::Torus;
        else
            throw InputError(what + ": unsupported type '" + type + "'");
        spec.push_back({ft, static_cast<int>(rank)});
    }
    return spec;
}

inline ordered_json group_spec_json(const RootDatum &d) {
    ordered_json factors = ordered_json::array();
    for (const auto &f : d.factors()) {
        std::string type = f.type == FactorType::Torus ? "torus" : factor_name(f).substr(0, 1);
        factors.push_back(ordered_json{{"type", type}, {"rank", f.rank}});
    }
    return ordered_json{{"factors", factors}};
}

inline RootDatum parse_group(const json &j) { return build_root_datum(parse_group_spec(j)); }

namespace detail {

inline MeasurePiece parse_piece(const json &j, const IntMatrix &embedding, const std::string &what) {
    const Rational mass = as_rational(require(j, "mass", what), what);
    if (j.contains("angles"))
        return PointAtom{as_torus_element(j.at("angles"), what), mass};
    if (j.contains("offset"))
        return TorusPiece{embedding, as_torus_element(j.at("offset"), what), mass};
    throw InputError(what + ": coset needs 'angles' (point) or 'offset' (translated torus)");
}

} // namespace detail

/// Parses a subgroup object; the result is validated against `datum`.
inline SubgroupDescriptor parse_subgroup(const json &j, const RootDatum &datum, const std::string &name) {
    const std::string what = "subgroup '" + name + "'";
    const json &kind_field = detail::require(j, "kind", what);
    if (!kind_field.is_string())
        throw InputError(what + ": 'kind' must be a string");
    const std::string kind = kind_field.get<std::string>();
    SubgroupDescriptor h;
    h.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : name;
    if (kind == "catalog") {
        const json &n = detail::require(j, "name", what);
        if (!n.is_string())
            throw InputError(what + ": catalog 'name' must be a string");
        std::optional<std::int64_t> p;
        if (j.contains("parameter"))
            p = detail::as_int(j.at("parameter"), what);
        return catalog_lookup(datum, n.get<std::string>(), p);
    }
    if (kind == "finite_classes") {
        const json &atoms = detail::require(j, "atoms", what);
        if (!atoms.is_array())
            throw InputError(what + ": 'atoms' must be an array");
        ClassMeasure m;
        BigInt order = 1;
        for (const auto &a : atoms) {
            m.pieces.push_back(PointAtom{detail::as_torus_element(detail::require(a, "angles", what), what),
                                         detail::as_rational(detail::require(a, "mass", what), what)});
            order = boost::multiprecision::lcm(order, denominator(piece_mass(m.pieces.back())));
        }
        m.component_count = j.contains("order") ? detail::as_int(j.at("order"), what) : to_int64(order);
        h.kind = FiniteClasses{std::move(m)};
    } else if (kind == "subtorus") {
        Subtorus s{detail::as_int_matrix(detail::require(j, "embedding", what), what), {}};
        if (j.contains("cosets")) {
            if (!j.at("cosets").is_array())
                throw InputError(what + ": 'cosets' must be an array");
            for (const auto &c : j.at("cosets"))
                s.cosets.push_back(detail::parse_piece(c, s.embedding, what));
        }
        h.kind = std::move(s);
    } else if (kind == "connected") {
        const json &hf = detail::require(j, "h_factors", what);
        RootDatum hd = build_root_datum(parse_group_spec(json{{"factors", hf}}));
        h.kind = ConnectedEmbedding{std::move(hd), detail::as_int_matrix(detail::require(j, "restriction", what), what)};
    } else {
        throw InputError(what + ": unknown kind '" + kind + "'");
    }
    validate_subgroup(datum, h);
    return h;
}

inline ordered_json subgroup_json(const SubgroupDescriptor &h) {
    ordered_json j;
    auto pieces = [](const std::vector<MeasurePiece> &ps, bool skip_identity_torus) {
        ordered_json out = ordered_json::array();
        for (const auto &p : ps) {
            if (const auto *a = std::get_if<PointAtom>(&p)) {
                out.push_back(ordered_json{{"angles", detail::torus_element_json(a->element)}, {"mass", to_string(a->mass)}});
            } else if (!skip_identity_torus) {
                const auto &t = std::get<TorusPiece>(p);
                out.push_back(ordered_json{{"offset", detail::torus_element_json(t.offset)}, {"mass", to_string(t.mass)}});
            }
        }
        return out;
    };
    if (const auto *f = std::get_if<FiniteClasses>(&h.kind)) {
        j["kind"] = "finite_classes";
        j["name"] = h.name;
        j["order"] = f->measure.component_count;
        j["atoms"] = pieces(f->measure.pieces, false);
    } else if (const auto *s = std::get_if<Subtorus>(&h.kind)) {
        j["kind"] = "subtorus";
        j["name"] = h.name;
        j["embedding"] = s->embedding;
        j["cosets"] = pieces(s->cosets, false);
    } else {
        const auto &c = std::get<ConnectedEmbedding>(h.kind);
        j["kind"] = "connected";
        j["name"] = h.name;
        j["h_factors"] = group_spec_json(c.h_datum)["factors"];
        j["restriction"] = c.restriction;
    }
    return j;
}

inline ordered_json datum_json(const DatumVector &d) {
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < d.weights.size(); ++i)
        entries.push_back(ordered_json{{"weight", d.weights[i].coords},
                                       {"dim", weyl_dimension(d.group, d.weights[i])},
                                       {"value", d.values[i]}});
    return ordered_json{{"group", group_spec_json(d.group)},
                        {"subgroup", d.subgroup_name},
                        {"truncation", d.truncation},
                        {"entries", entries}};
}

/// Inverse of datum_json; the weight list must be exactly the enumeration
/// at the stated truncation.
inline DatumVector parse_datum(const json &j) {
    const std::string what = "dimension datum";
    RootDatum group = parse_group(detail::require(j, "group", what));
    const std::int64_t truncation = detail::as_int(detail::require(j, "truncation", what), what);
    const json &name = detail::require(j, "subgroup", what);
    if (!name.is_string())
        throw InputError(what + ": 'subgroup' must be a string");
    DatumVector d{group, truncation, name.get<std::string>(), {}, {}};
    const json &entries = detail::require(j, "entries", what);
    if (!entries.is_array())
        throw InputError(what + ": 'entries' must be an array");
    for (const auto &e : entries) {
        d.weights.push_back({detail::as_weight(detail::require(e, "weight", what), what)});
        d.values.push_back(detail::as_int(detail::require(e, "value", what), what));
    }
    if (d.weights != enumerate_irreps(group, truncation))
        throw InputError(what + ": weights do not match the enumeration at truncation " + std::to_string(truncation));
    for (std::size_t i = 0; i < d.weights.size(); ++i)
        if (d.values[i] < 0 || d.values[i] > weyl_dimension(group, d.weights[i]))
            throw InputError(what + ": value at " + weight_label(d.weights[i].coords) + " is outside [0, dim V]");
    return d;
}

inline ordered_json spectrum_json(const SpectrumMultiset &s) {
    ordered_json entries = ordered_json::array();
    for (const auto &e : s.entries)
        entries.push_back(ordered_json{{"eigenvalue", to_string(e.eigenvalue)}, {"multiplicity", e.multiplicity}});
    return ordered_json{{"group", s.group_key},
                        {"subgroup", s.subgroup_name},
                        {"truncation", s.truncation},
                        {"metric_constant", kMetricConstant},
                        {"normalization", "eigenvalue = 2<lambda, lambda + 2rho>, short roots of length^2 2"},
                        {"spectrum", entries}};
}

inline SpectrumMultiset parse_spectrum(const json &j) {
    const std::string what = "spectrum";
    SpectrumMultiset s;
    const json &g = detail::require(j, "group", what);
    const json &n = detail::require(j, "subgroup", what);
    if (!g.is_string() || !n.is_string())
        throw InputError(what + ": 'group' and 'subgroup' must be strings");
    s.group_key = g.get<std::string>();
    s.subgroup_name = n.get<std::string>();
    s.truncation = detail::as_int(detail::require(j, "truncation", what), what);
    if (detail::as_int(detail::require(j, "metric_constant", what), what) != kMetricConstant)
        throw InputError(what + ": unsupported metric constant");
    for (const auto &e : detail::require(j, "spectrum", what)) {
        SpectrumEntry entry{detail::as_rational(detail::require(e, "eigenvalue", what), what),
                            detail::as_int(detail::require(e, "multiplicity", what), what)};
        if (!s.entries.empty() && entry.eigenvalue <= s.entries.back().eigenvalue)
            throw InputError(what + ": eigenvalues must be strictly increasing");
        if (entry.multiplicity <= 0)
            throw InputError(what + ": multiplicities must be positive");
        s.entries.push_back(std::move(entry));
    }
    return s;
}

inline ordered_json report_json(const StabilizationReport &r) {
    ordered_json labels = ordered_json::array();
    for (const auto &l : r.labels)
        labels.push_back(ordered_json{{"weight", l.weight.coords},
                                      {"final_value", l.final_value},
                                      {"stable_from", l.stable_from ? ordered_json(*l.stable_from) : ordered_json()}});
    return ordered_json{{"truncation", r.truncation},
                        {"members", r.members},
                        {"stabilized", r.stabilized},
                        {"candidate", r.candidate ? ordered_json(*r.candidate) : ordered_json()},
                        {"matched_candidate", r.matched_candidate ? ordered_json(*r.matched_candidate) : ordered_json()},
                        {"labels", labels},
                        {"limit", r.limit ? datum_json(*r.limit) : ordered_json()}};
}

} // namespace dimdatum
