#pragma once

// Command-line front end:
//   dimdatum <command> --config <path> [--name <id>]... [--truncation N] [--format table|json]
// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
// 2 input error, 3 internal consistency failure.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalog.hpp"
#include "config.hpp"
#include "datum.hpp"
#include "error.hpp"
#include "io.hpp"
#include "spectral.hpp"

namespace dimdatum::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2, kConsistencyError = 3 };

struct Options {
    std::string command;
    std::string config_path;
    std::vector<std::string> names;
    std::optional<std::int64_t> truncation;
    std::optional<std::string> format;
    std::optional<std::string> candidate;
};

namespace detail {

struct Job {
    JobConfig config;
    RootDatum group;
    std::int64_t truncation;
    bool json;
};

inline Job load_job(const Options &o) {
    JobConfig c;
    if (o.config_path.empty()) {
        if (o.command != "catalog")
            throw InputError("--config is required");
        c.group = {{FactorType::A, 1}};
    } else {
        c = load_config(o.config_path);
    }
    RootDatum g = build_root_datum(c.group);
    const std::int64_t n = o.truncation.value_or(c.truncation);
    if (n < 0)
        throw InputError("truncation must be nonnegative");
    const std::string format = o.format.value_or(c.output);
    return Job{std::move(c), std::move(g), n, format == "json"};
}

inline void expect_names(const Options &o, std::size_t count) {
    if (o.names.size() != count)
        throw InputError("command '" + o.command + "' needs exactly " + std::to_string(count) + " --name argument" +
                         (count == 1 ? "" : "s"));
}

inline void emit_json(std::ostream &out, const ordered_json &j) { out << j.dump(2) << "\n"; }

inline std::string cell(const std::string &s, int width) {
    std::ostringstream o;
    o << std::left << std::setw(width) << s;
    return o.str();
}

inline int cmd_datum(const Options &o, std::ostream &out) {
    expect_names(o, 1);
    Job job = load_job(o);
    const auto h = resolve_subgroup(job.config, job.group, o.names[0]);
    const DatumVector d = dimension_datum(job.group, h, job.truncation);
    if (job.json) {
        emit_json(out, datum_json(d));
        return kSuccess;
    }
    out << "# dimension datum of " << h.name << " in " << job.group.key() << ", Casimir <= " << job.truncation << "\n";
    out << cell("weight", 16) << cell("dim V", 10) << "dim V^H\n";
    for (std::size_t i = 0; i < d.weights.size(); ++i)
        out << cell(weight_label(d.weights[i].coords), 16)
            << cell(std::to_string(weyl_dimension(d.group, d.weights[i])), 10) << d.values[i] << "\n";
    return kSuccess;
}

inline int cmd_limit(const Options &o, std::ostream &out) {
    expect_names(o, 1);
    Job job = load_job(o);
    const auto family = expand_family(job.config, job.group, o.names[0]);
    std::optional<std::string> candidate_name = o.candidate;
    if (!candidate_name)
        candidate_name = job.config.families.at(o.names[0]).candidate;
    std::optional<SubgroupDescriptor> candidate;
    if (candidate_name)
        candidate = resolve_subgroup(job.config, job.group, *candidate_name);
    const StabilizationReport r = family_limit(job.group, family, job.truncation, candidate);
    const bool affirmative = r.stabilized && (!candidate || r.matched_candidate);
    if (job.json) {
        emit_json(out, report_json(r));
        return affirmative ? kSuccess : kNegative;
    }
    out << "# family '" << o.names[0] << "' (" << r.members.size() << " members) in " << job.group.key()
        << ", Casimir <= " << job.truncation << "\n";
    out << cell("weight", 16) << cell("final", 8) << "stable from\n";
    for (const auto &l : r.labels) {
        out << cell(weight_label(l.weight.coords), 16) << cell(std::to_string(l.final_value), 8);
        if (l.stable_from)
            out << "#" << *l.stable_from << " " << r.members[*l.stable_from] << "\n";
        else
            out << "-\n";
    }
    if (!r.stabilized) {
        out << "not stabilized at " << weight_label(r.first_unstable()->weight.coords) << "\n";
    } else if (candidate) {
        if (r.matched_candidate)
            out << "stabilized; matches " << *r.matched_candidate << "\n";
        else
            out << "stabilized; does not match " << candidate->name << "\n";
    } else {
        out << "stabilized\n";
    }
    return affirmative ? kSuccess : kNegative;
}

inline int cmd_separate(const Options &o, std::ostream &out) {
    expect_names(o, 2);
    Job job = load_job(o);
    const auto h = resolve_subgroup(job.config, job.group, o.names[0]);
    const auto hp = resolve_subgroup(job.config, job.group, o.names[1]);
    const auto s = find_separating_irrep(job.group, h, hp, job.truncation);
    if (job.json) {
        ordered_json j{{"h", h.name}, {"h_prime", hp.name}, {"max_truncation", job.truncation}, {"found", s.has_value()}};
        if (s) {
            j["weight"] = s->weight.coords;
            j["value_h"] = s->value_h;
            j["value_h_prime"] = s->value_h_prime;
        }
        emit_json(out, j);
        return s ? kSuccess : kNegative;
    }
    out << "# separating " << h.name << " from " << hp.name << " in " << job.group.key() << ", Casimir <= "
        << job.truncation << "\n";
    if (s)
        out << weight_label(s->weight.coords) << ": " << s->value_h << " > " << s->value_h_prime << "\n";
    else
        out << "none found up to Casimir " << job.truncation << "\n";
    return s ? kSuccess : kNegative;
}

inline void print_spectrum_header(std::ostream &out, const RootDatum &g, const std::string &what, std::int64_t n) {
    out << "# " << what << " in " << g.key() << ", Casimir <= " << n << "\n";
    out << "# eigenvalue = " << kMetricConstant << "<lambda, lambda + 2rho>, short roots of length^2 2\n";
}

inline int cmd_spectrum(const Options &o, std::ostream &out) {
    expect_names(o, 1);
    Job job = load_job(o);
    const auto h = resolve_subgroup(job.config, job.group, o.names[0]);
    const SpectrumMultiset s = homogeneous_spectrum(job.group, h, job.truncation);
    if (job.json) {
        emit_json(out, spectrum_json(s));
        return kSuccess;
    }
    print_spectrum_header(out, job.group, "spectrum of G/" + h.name, job.truncation);
    out << cell("eigenvalue", 14) << "multiplicity\n";
    for (const auto &e : s.entries)
        out << cell(to_string(e.eigenvalue), 14) << e.multiplicity << "\n";
    return kSuccess;
}

inline int cmd_isospec(const Options &o, std::ostream &out) {
    expect_names(o, 2);
    Job job = load_job(o);
    const auto a = resolve_subgroup(job.config, job.group, o.names[0]);
    const auto b = resolve_subgroup(job.config, job.group, o.names[1]);
    const auto diff = isospectral_compare(homogeneous_spectrum(job.group, a, job.truncation),
                                          homogeneous_spectrum(job.group, b, job.truncation));
    if (job.json) {
        ordered_json j{{"a", a.name}, {"b", b.name}, {"truncation", job.truncation}, {"isospectral", !diff}};
        if (diff) {
            j["eigenvalue"] = to_string(diff->eigenvalue);
            j["multiplicity_a"] = diff->multiplicity_a;
            j["multiplicity_b"] = diff->multiplicity_b;
        }
        emit_json(out, j);
        return diff ? kNegative : kSuccess;
    }
    print_spectrum_header(out, job.group, "G/" + a.name + " vs G/" + b.name, job.truncation);
    if (diff)
        out << "differ at eigenvalue " << to_string(diff->eigenvalue) << ": " << diff->multiplicity_a << " vs "
            << diff->multiplicity_b << "\n";
    else
        out << "isospectral up to Casimir " << job.truncation << "\n";
    return diff ? kNegative : kSuccess;
}

inline int cmd_catalog(const Options &o, std::ostream &out) {
    Job job = load_job(o);
    struct Row {
        std::string name, status;
    };
    std::vector<Row> rows;
    bool all_ok = true;
    for (const auto &c : catalog_names()) {
        std::vector<std::optional<std::int64_t>> params{std::nullopt};
        if (c.parametric) {
            params.clear();
            for (std::int64_t p = c.name == "cyclic" ? 1 : 2; p <= 12; ++p)
                params.push_back(p);
        }
        for (const auto &p : params) {
            SubgroupDescriptor h;
            try {
                h = dimdatum::detail::build_catalog_entry(job.group, c.name, p);
            } catch (const InputError &) {
                break; // not defined for this group
            }
            const CatalogValidation v = validate_catalog_entry(job.group, h);
            all_ok = all_ok && v.ok;
            rows.push_back({h.name, v.ok ? "ok" : "rejected: " + v.message});
        }
    }
    if (job.json) {
        ordered_json j = ordered_json::array();
        for (const auto &r : rows)
            j.push_back(ordered_json{{"name", r.name}, {"status", r.status}});
        emit_json(out, ordered_json{{"group", job.group.key()}, {"sweep_truncation", kCatalogSweepTruncation}, {"entries", j}});
    } else {
        out << "# catalog for " << job.group.key() << ", validated up to Casimir " << kCatalogSweepTruncation << "\n";
        for (const auto &r : rows)
            out << cell(r.name, 24) << r.status << "\n";
    }
    return all_ok ? kSuccess : kConsistencyError;
}

} // namespace detail

inline int dispatch(const Options &o, std::ostream &out, std::ostream &err) {
    try {
        if (o.command == "datum")
            return detail::cmd_datum(o, out);
        if (o.command == "limit")
            return detail::cmd_limit(o, out);
        if (o.command == "separate")
            return detail::cmd_separate(o, out);
        if (o.command == "spectrum")
            return detail::cmd_spectrum(o, out);
        if (o.command == "isospec")
            return detail::cmd_isospec(o, out);
        if (o.command == "catalog")
            return detail::cmd_catalog(o, out);
        err << "unknown command '" << o.command << "'\n";
        return kInputError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError &e) {
        err << "consistency failure: " << e.what() << "\n";
        return kConsistencyError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kConsistencyError;
    }
}

/// args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Dimension data of closed subgroups of compact Lie groups", "dimdatum"};
    app.require_subcommand(1);
    Options o;
    std::int64_t truncation = 0;
    std::string format;
    std::string candidate;
    const std::vector<std::pair<const char *, const char *>> commands{
        {"datum", "print the truncated dimension datum of a subgroup"},
        {"limit", "check stabilization of a subgroup family"},
        {"separate", "find an irrep separating H from an overgroup H'"},
        {"spectrum", "Laplace spectrum of G/H"},
        {"isospec", "compare the spectra of G/H and G/H'"},
        {"catalog", "list shipped subgroups with validation status"},
    };
    std::vector<CLI::App *> subs;
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", o.config_path, "job configuration (JSON)");
        sub->add_option("--name", o.names, "subgroup or family name; repeat for two-argument commands");
        sub->add_option("--truncation", truncation, "Casimir cutoff, overrides the config");
        sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
        if (std::string(name) == "limit")
            sub->add_option("--candidate", candidate, "expected limit subgroup");
        subs.push_back(sub);
    }
    std::vector<std::string> argv_storage{"dimdatum"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInputError;
    }
    for (auto *sub : subs) {
        if (sub->parsed()) {
            o.command = sub->get_name();
            if (sub->count("--truncation"))
                o.truncation = truncation;
            if (sub->count("--format"))
                o.format = format;
            if (sub->get_name() == "limit" && sub->count("--candidate"))
                o.candidate = candidate;
        }
    }
    return dispatch(o, out, err);
}

} // namespace dimdatum::cli
