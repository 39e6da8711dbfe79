#pragma once

// Job configuration files: one JSON document naming the group, subgroups,
// families and output settings of an experiment.
//
//   {
//     "group": {"factors": [{"type": "A", "rank": 1}]},
//     "truncation": 8,
//     "output": "table",
//     "subgroups": {"T": {"kind": "catalog", "name": "maximal_torus"}},
//     "families": {"cyclic": {"members": [{"catalog": "cyclic", "range": [1, 50]}], "candidate": "T"}}
//   }
//
// Family members are subgroup names, inline subgroup objects, or catalog
// generators {"catalog": name, "parameter": p} / {"catalog": name, "range": [lo, hi]}.
// Anywhere a subgroup name is expected, a catalog reference such as
// "cyclic(8)" or "maximal_torus" also resolves.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "io.hpp"

namespace dimdatum {

struct FamilySpec {
    std::vector<json> members;
    std::optional<std::string> candidate;
};

struct JobConfig {
    std::vector<FactorSpec> group;
    std::map<std::string, json> subgroups;
    std::map<std::string, FamilySpec> families;
    std::int64_t truncation = 8;
    std::string output = "table";
};

namespace detail {

inline bool is_catalog_reference(const std::string &text) {
    try {
        const auto name = parse_catalog_reference(text).first;
        return std::any_of(catalog_names().begin(), catalog_names().end(),
                           [&](const CatalogName &c) { return c.name == name; });
    } catch (const InputError &) {
        return false;
    }
}

} // namespace detail

inline JobConfig parse_config(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError("config parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        throw InputError("config must be a JSON object");
    JobConfig c;
    c.group = parse_group_spec(detail::require(j, "group", "config"));
    if (j.contains("truncation"))
        c.truncation = detail::as_int(j.at("truncation"), "config truncation");
    if (c.truncation < 0)
        throw InputError("config truncation must be nonnegative");
    if (j.contains("output")) {
        if (!j.at("output").is_string())
            throw InputError("config output must be \"table\" or \"json\"");
        c.output = j.at("output").get<std::string>();
    }
    if (c.output != "table" && c.output != "json")
        throw InputError("config output must be \"table\" or \"json\", got '" + c.output + "'");
    if (j.contains("subgroups")) {
        if (!j.at("subgroups").is_object())
            throw InputError("config 'subgroups' must be an object");
        for (const auto &[name, spec] : j.at("subgroups").items())
            c.subgroups[name] = spec;
    }
    if (j.contains("families")) {
        if (!j.at("families").is_object())
            throw InputError("config 'families' must be an object");
        for (const auto &[name, spec] : j.at("families").items()) {
            FamilySpec f;
            const json &members = detail::require(spec, "members", "family '" + name + "'");
            if (!members.is_array())
                throw InputError("family '" + name + "': 'members' must be an array");
            f.members.assign(members.begin(), members.end());
            if (spec.contains("candidate")) {
                if (!spec.at("candidate").is_string())
                    throw InputError("family '" + name + "': 'candidate' must be a subgroup name");
                f.candidate = spec.at("candidate").get<std::string>();
            }
            c.families[name] = std::move(f);
        }
    }
    // every referenced name must resolve
    auto check_ref = [&](const std::string &ref, const std::string &where) {
        if (!c.subgroups.contains(ref) && !detail::is_catalog_reference(ref))
            throw InputError(where + ": unknown subgroup '" + ref + "'");
    };
    for (const auto &[name, f] : c.families) {
        for (const auto &m : f.members) {
            if (m.is_string())
                check_ref(m.get<std::string>(), "family '" + name + "'");
            else if (!m.is_object() || !(m.contains("catalog") || m.contains("kind")))
                throw InputError("family '" + name + "': members must be names, subgroup objects or catalog generators");
        }
        if (f.candidate)
            check_ref(*f.candidate, "family '" + name + "' candidate");
    }
    return c;
}

inline JobConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

inline SubgroupDescriptor resolve_subgroup(const JobConfig &c, const RootDatum &datum, const std::string &name) {
    if (auto it = c.subgroups.find(name); it != c.subgroups.end())
        return parse_subgroup(it->second, datum, name);
    if (detail::is_catalog_reference(name)) {
        auto [n, p] = parse_catalog_reference(name);
        return catalog_lookup(datum, n, p);
    }
    throw InputError("unknown subgroup '" + name + "'");
}

inline std::vector<SubgroupDescriptor> expand_family(const JobConfig &c, const RootDatum &datum,
                                                     const std::string &family) {
    auto it = c.families.find(family);
    if (it == c.families.end())
        throw InputError("unknown family '" + family + "'");
    std::vector<SubgroupDescriptor> out;
    for (const auto &m : it->second.members) {
        if (m.is_string()) {
            out.push_back(resolve_subgroup(c, datum, m.get<std::string>()));
        } else if (m.contains("kind")) {
            out.push_back(parse_subgroup(m, datum, "family '" + family + "' member " + std::to_string(out.size())));
        } else {
            const std::string what = "family '" + family + "' generator";
            const json &n = m.at("catalog");
            if (!n.is_string())
                throw InputError(what + ": 'catalog' must be a name");
            if (m.contains("range")) {
                const json &r = m.at("range");
                if (!r.is_array() || r.size() != 2)
                    throw InputError(what + ": 'range' must be [first, last]");
                const std::int64_t lo = detail::as_int(r[0], what), hi = detail::as_int(r[1], what);
                if (lo > hi)
                    throw InputError(what + ": empty range");
                for (std::int64_t p = lo; p <= hi; ++p)
                    out.push_back(catalog_lookup(datum, n.get<std::string>(), p));
            } else {
                std::optional<std::int64_t> p;
                if (m.contains("parameter"))
                    p = detail::as_int(m.at("parameter"), what);
                out.push_back(catalog_lookup(datum, n.get<std::string>(), p));
            }
        }
    }
    return out;
}

} // namespace dimdatum
