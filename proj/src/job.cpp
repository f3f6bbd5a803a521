#include "reesmult/job.hpp"

#include <set>
#include <sstream>

namespace reesmult {

namespace {

using njson = nlohmann::ordered_json;

// Parses while tracking object scopes so duplicate keys are rejected instead
// of silently overwriting; a duplicate inside "ideals" gets its own code.
njson parse_text(const std::string& text) {
    struct Scope {
        std::string name;
        std::set<std::string> keys;
    };
    std::vector<Scope> stack;
    std::string pending;
    auto cb = [&](int, njson::parse_event_t event, njson& parsed) {
        switch (event) {
            case njson::parse_event_t::object_start:
                stack.push_back({pending, {}});
                pending.clear();
                break;
            case njson::parse_event_t::object_end:
                stack.pop_back();
                pending.clear();
                break;
            case njson::parse_event_t::key: {
                auto key = parsed.get<std::string>();
                if (!stack.back().keys.insert(key).second) {
                    if (stack.back().name == "ideals")
                        fail(errc::duplicate_ideal_name,
                             "ideal name '" + key + "' appears twice");
                    fail(errc::parse_error, "duplicate key '" + key + "'");
                }
                pending = key;
                break;
            }
            default:
                pending.clear();
                break;
        }
        return true;
    };
    try {
        return njson::parse(text, cb);
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

const njson& need(const njson& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(errc::parse_error, where + " is missing \"" + key + "\"");
    return *it;
}

std::string need_string(const njson& obj, const std::string& key, const std::string& where) {
    const njson& v = need(obj, key, where);
    if (!v.is_string()) fail(errc::parse_error, where + "." + key + " must be a string");
    return v.get<std::string>();
}

std::vector<std::string> need_string_array(const njson& obj, const std::string& key,
                                           const std::string& where) {
    const njson& v = need(obj, key, where);
    if (!v.is_array()) fail(errc::parse_error, where + "." + key + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string())
            fail(errc::parse_error, where + "." + key + " must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

int opt_int(const njson& obj, const std::string& key, int fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number_integer())
        fail(errc::parse_error, "option \"" + key + "\" must be an integer");
    return it->get<int>();
}

const std::set<std::string> kCommands = {"colength",   "mixed-mult",     "rees-mult",
                                         "ext-rees-mult", "katz-verma",  "identity-check",
                                         "remark-check"};

const std::map<std::string, IdentityKind> kIdentityKinds = {
    {"pair-square", IdentityKind::PairSquare},
    {"pair-first-power", IdentityKind::PairFirstPower},
    {"multi-square", IdentityKind::MultiSquare},
    {"tower-stage-one", IdentityKind::TowerStageOne},
};

Mode mode_from_string(const std::string& s) {
    if (s == "formula") return Mode::FormulaOnly;
    if (s == "oracle") return Mode::OracleOnly;
    if (s == "verify") return Mode::Verify;
    fail(errc::parse_error, "mode must be formula, oracle, or verify");
}

std::string mode_to_string(Mode m) {
    switch (m) {
        case Mode::FormulaOnly: return "formula";
        case Mode::OracleOnly: return "oracle";
        case Mode::Verify: return "verify";
    }
    fail(errc::internal, "bad mode");
}

void check_named(const JobSpec& spec, const std::string& name, const std::string& where) {
    if (!spec.ideals.count(name))
        fail(errc::bad_request, where + " references unknown ideal \"" + name + "\"");
}

const MonomialIdeal& named(const JobSpec& spec, const std::string& name) {
    auto it = spec.ideals.find(name);
    if (it == spec.ideals.end())
        fail(errc::bad_request, "unknown ideal \"" + name + "\"");
    return it->second;
}

std::vector<MonomialIdeal> named_family(const JobSpec& spec,
                                        const std::vector<std::string>& names) {
    std::vector<MonomialIdeal> out;
    for (const auto& n : names) out.push_back(named(spec, n));
    return out;
}

njson report_from(const FormulaReport& fr) {
    njson out;
    out["command"] = fr.name;
    out["inputs"] = fr.inputs;
    if (fr.formula_value) out["formula"] = rat_string(*fr.formula_value);
    if (fr.oracle_value) out["oracle"] = rat_string(*fr.oracle_value);
    if (fr.agree.has_value()) out["agree"] = *fr.agree;
    njson det = njson::object();
    for (const auto& [k, v] : fr.detail) det[k] = rat_string(v);
    out["detail"] = det;
    return out;
}

int exit_for(const FormulaReport& fr) {
    return fr.agree.has_value() && !*fr.agree ? 2 : 0;
}

std::string tuple_key(const std::vector<int>& q) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) os << ",";
        os << q[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

bool JobSpec::operator==(const JobSpec& o) const {
    return *ring == *o.ring && ideal_names == o.ideal_names && ideals == o.ideals &&
           command == o.command && arg_ideals == o.arg_ideals &&
           arg_primary == o.arg_primary && arg_secondary == o.arg_secondary &&
           arg_extra == o.arg_extra && identity_kind == o.identity_kind && mode == o.mode &&
           format == o.format && options.offset == o.options.offset &&
           options.validation_shells == o.options.validation_shells &&
           options.offset_cap == o.options.offset_cap &&
           options.box_margin == o.options.box_margin &&
           options.box_cap == o.options.box_cap && options.workers == o.options.workers;
}

JobSpec parse_job(const std::string& text, const std::string& command_override) {
    njson doc = parse_text(text);
    if (!doc.is_object()) fail(errc::parse_error, "job document must be an object");

    JobSpec spec;

    const njson& ring = need(doc, "ring", "job");
    if (!ring.is_object()) fail(errc::parse_error, "ring must be an object");
    const njson& dim_v = need(ring, "dim", "ring");
    if (!dim_v.is_number_integer()) fail(errc::parse_error, "ring.dim must be an integer");
    int dim = dim_v.get<int>();
    std::vector<std::string> vars = need_string_array(ring, "vars", "ring");
    if (dim != static_cast<int>(vars.size()))
        fail(errc::parse_error, "ring.dim does not match the variable count");
    spec.ring = make_ring(dim, vars);

    const njson& ideals = need(doc, "ideals", "job");
    if (!ideals.is_object()) fail(errc::parse_error, "ideals must be an object");
    for (auto it = ideals.begin(); it != ideals.end(); ++it) {
        if (!it.value().is_array())
            fail(errc::parse_error, "ideal \"" + it.key() + "\" must be a generator array");
        std::vector<std::string> gens;
        for (const auto& g : it.value()) {
            if (!g.is_string())
                fail(errc::parse_error, "generators of \"" + it.key() + "\" must be strings");
            gens.push_back(g.get<std::string>());
        }
        spec.ideal_names.push_back(it.key());
        spec.ideals.emplace(it.key(), parse_ideal(spec.ring, gens));
    }

    if (doc.contains("command")) spec.command = need_string(doc, "command", "job");
    if (!command_override.empty()) {
        if (!spec.command.empty() && spec.command != command_override)
            fail(errc::bad_request, "document command \"" + spec.command +
                                        "\" conflicts with requested \"" + command_override +
                                        "\"");
        spec.command = command_override;
    }
    if (spec.command.empty()) fail(errc::parse_error, "job is missing \"command\"");
    if (!kCommands.count(spec.command))
        fail(errc::bad_request, "unknown command \"" + spec.command + "\"");

    njson args = doc.contains("args") ? doc.at("args") : njson::object();
    if (!args.is_object()) fail(errc::parse_error, "args must be an object");
    if (spec.command == "colength") {
        spec.arg_ideals = {need_string(args, "ideal", "args")};
    } else if (spec.command == "mixed-mult") {
        spec.arg_primary = need_string(args, "primary", "args");
        if (args.contains("companions"))
            spec.arg_ideals = need_string_array(args, "companions", "args");
    } else if (spec.command == "katz-verma") {
        spec.arg_primary = need_string(args, "J", "args");
        spec.arg_secondary = need_string(args, "I", "args");
    } else if (spec.command == "identity-check") {
        spec.identity_kind = need_string(args, "kind", "args");
        if (!kIdentityKinds.count(spec.identity_kind))
            fail(errc::bad_request, "unknown identity kind \"" + spec.identity_kind + "\"");
        spec.arg_secondary = need_string(args, "I", "args");
        if (args.contains("J")) spec.arg_primary = need_string(args, "J", "args");
        if (spec.identity_kind != "tower-stage-one" && spec.arg_primary.empty())
            fail(errc::parse_error, "args is missing \"J\"");
        if (args.contains("companions"))
            spec.arg_ideals = need_string_array(args, "companions", "args");
        if (args.contains("J1")) spec.arg_extra = need_string(args, "J1", "args");
    } else {
        spec.arg_ideals = need_string_array(args, "ideals", "args");
        if (spec.arg_ideals.empty()) fail(errc::bad_request, "args.ideals must be nonempty");
    }
    for (const auto& n : spec.arg_ideals) check_named(spec, n, "args");
    if (!spec.arg_primary.empty()) check_named(spec, spec.arg_primary, "args");
    if (!spec.arg_secondary.empty()) check_named(spec, spec.arg_secondary, "args");
    if (!spec.arg_extra.empty()) check_named(spec, spec.arg_extra, "args");

    njson options = doc.contains("options") ? doc.at("options") : njson::object();
    if (!options.is_object()) fail(errc::parse_error, "options must be an object");
    if (options.contains("mode"))
        spec.mode = mode_from_string(need_string(options, "mode", "options"));
    if (options.contains("format")) {
        spec.format = need_string(options, "format", "options");
        if (spec.format != "json" && spec.format != "table")
            fail(errc::parse_error, "format must be json or table");
    }
    ComputeOptions defaults;
    spec.options.offset = opt_int(options, "offset", defaults.offset);
    spec.options.validation_shells = opt_int(options, "shells", defaults.validation_shells);
    spec.options.offset_cap = opt_int(options, "offset_cap", defaults.offset_cap);
    spec.options.box_margin = opt_int(options, "box_margin", defaults.box_margin);
    spec.options.box_cap = opt_int(options, "box_cap", defaults.box_cap);
    spec.options.workers = opt_int(options, "workers", defaults.workers);
    if (spec.options.offset < 1 || spec.options.validation_shells < 1 ||
        spec.options.offset_cap < spec.options.offset || spec.options.box_margin < 0 ||
        spec.options.box_cap < 1)
        fail(errc::bad_request, "option values out of range");
    return spec;
}

std::string render_job(const JobSpec& spec) {
    njson doc;
    doc["ring"] = {{"dim", spec.ring->dim}, {"vars", spec.ring->vars}};
    njson ideals = njson::object();
    for (const auto& name : spec.ideal_names) {
        njson gens = njson::array();
        for (const auto& g : spec.ideals.at(name).gens())
            gens.push_back(monomial_string(*spec.ring, g));
        ideals[name] = gens;
    }
    doc["ideals"] = ideals;
    doc["command"] = spec.command;
    njson args = njson::object();
    if (spec.command == "colength") {
        args["ideal"] = spec.arg_ideals.front();
    } else if (spec.command == "mixed-mult") {
        args["primary"] = spec.arg_primary;
        args["companions"] = spec.arg_ideals;
    } else if (spec.command == "katz-verma") {
        args["J"] = spec.arg_primary;
        args["I"] = spec.arg_secondary;
    } else if (spec.command == "identity-check") {
        args["kind"] = spec.identity_kind;
        if (!spec.arg_primary.empty()) args["J"] = spec.arg_primary;
        args["I"] = spec.arg_secondary;
        args["companions"] = spec.arg_ideals;
        if (!spec.arg_extra.empty()) args["J1"] = spec.arg_extra;
    } else {
        args["ideals"] = spec.arg_ideals;
    }
    doc["args"] = args;
    doc["options"] = {{"mode", mode_to_string(spec.mode)},
                      {"format", spec.format},
                      {"offset", spec.options.offset},
                      {"shells", spec.options.validation_shells},
                      {"offset_cap", spec.options.offset_cap},
                      {"box_margin", spec.options.box_margin},
                      {"box_cap", spec.options.box_cap},
                      {"workers", spec.options.workers}};
    return doc.dump(2) + "\n";
}

RunResult run_job(const JobSpec& spec) {
    const ComputeOptions& opt = spec.options;
    if (spec.command == "colength") {
        const auto& I = named(spec, spec.arg_ideals.front());
        njson out;
        out["command"] = spec.command;
        out["inputs"] = spec.arg_ideals.front() + "=" + I.to_string();
        out["value"] = colength(I).str();
        return {out, 0};
    }
    if (spec.command == "mixed-mult") {
        const auto& primary = named(spec, spec.arg_primary);
        auto companions = named_family(spec, spec.arg_ideals);
        auto table = mixed_multiplicities(primary, companions, opt);
        njson out;
        out["command"] = spec.command;
        std::string inputs = spec.arg_primary + "=" + primary.to_string();
        for (std::size_t i = 0; i < companions.size(); ++i)
            inputs += ", " + spec.arg_ideals[i] + "=" + companions[i].to_string();
        out["inputs"] = inputs;
        out["dim"] = table.dim;
        njson entries = njson::object();
        for (const auto& [q, v] : table.entries) entries[tuple_key(q)] = v.str();
        out["entries"] = entries;
        if (companions.size() == 1) {
            njson eq = njson::array();
            for (int q = 0; q <= table.dim; ++q) eq.push_back(table.eq(q).str());
            out["e_q"] = eq;
        }
        return {out, 0};
    }
    if (spec.command == "rees-mult") {
        auto fr = rees_report(named_family(spec, spec.arg_ideals), spec.mode, opt);
        return {report_from(fr), exit_for(fr)};
    }
    if (spec.command == "ext-rees-mult") {
        auto fr = ext_rees_report(named_family(spec, spec.arg_ideals), spec.mode, opt);
        return {report_from(fr), exit_for(fr)};
    }
    if (spec.command == "katz-verma") {
        auto fr = katz_verma_report(named(spec, spec.arg_primary),
                                    named(spec, spec.arg_secondary), spec.mode, opt);
        return {report_from(fr), exit_for(fr)};
    }
    if (spec.command == "identity-check") {
        IdentityKind kind = kIdentityKinds.at(spec.identity_kind);
        IdentityInputs in{named(spec, spec.arg_primary.empty() ? spec.arg_secondary
                                                               : spec.arg_primary),
                          named(spec, spec.arg_secondary),
                          named_family(spec, spec.arg_ideals),
                          spec.arg_extra.empty()
                              ? std::nullopt
                              : std::optional<MonomialIdeal>(named(spec, spec.arg_extra))};
        auto fr = identity_check(kind, in, opt);
        return {report_from(fr), exit_for(fr)};
    }
    if (spec.command == "remark-check") {
        auto fr = rees_vs_ext_rees_check(named_family(spec, spec.arg_ideals), opt);
        return {report_from(fr), exit_for(fr)};
    }
    fail(errc::bad_request, "unknown command \"" + spec.command + "\"");
}

namespace {

std::string scalar_text(const njson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

}  // namespace

std::string render_report(const nlohmann::ordered_json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "table") fail(errc::bad_request, "format must be json or table");
    std::size_t width = 0;
    for (const auto& [k, v] : report.items())
        if (!v.is_structured()) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : report.items()) {
        if (!v.is_structured()) {
            os << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << "\n";
            continue;
        }
        os << k << ":\n";
        if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                os << "  [" << i << "]  " << scalar_text(v[i]) << "\n";
            continue;
        }
        std::size_t inner = 0;
        for (const auto& [ik, iv] : v.items()) {
            (void)iv;
            inner = std::max(inner, ik.size());
        }
        for (const auto& [ik, iv] : v.items())
            os << "  " << ik << std::string(inner - ik.size() + 2, ' ') << scalar_text(iv)
               << "\n";
    }
    return os.str();
}

}  // namespace reesmult
