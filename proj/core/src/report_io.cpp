#include "basislab/report_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace basislab {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no infinities; the sentinel becomes the string "inf"
ordered_json num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double num_back(const ordered_json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw std::runtime_error("report: bad numeric string '" + s + "'");
    }
    return j.get<double>();
}

ordered_json bracket_json(const Bracket& b) {
    ordered_json j;
    j["lower"] = num(b.lower);
    j["upper"] = num(b.upper);
    return j;
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["kind"] = w.kind;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : w.params) params[k] = num(v);
    j["params"] = params;
    j["ratio"] = num(w.ratio);
    ordered_json vecs = ordered_json::array();
    for (const auto& v : w.vectors) vecs.push_back(v);
    j["vectors"] = vecs;
    return j;
}

std::string fmt12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string report_to_json(const SuiteReport& report, bool include_timestamp) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = "basislab";

    ordered_json space;
    space["text"] = report.space.text();
    space["family"] = std::string(family_token(report.space.family));
    space["p"] = report.space.p;
    space["theta"] = report.space.theta;
    space["s"] = report.space.s;
    j["space"] = space;

    const Budgets& b = report.config.budgets;
    j["seed"] = b.seed;
    ordered_json budgets;
    budgets["window"] = b.window;
    budgets["trials"] = b.trials;
    budgets["subset_cap"] = b.subset_cap;
    budgets["sign_cap"] = b.sign_cap;
    budgets["tensor_cap"] = b.tensor_cap;
    budgets["dual_restarts"] = b.dual_restarts;
    budgets["dual_ascent_limit"] = b.dual_ascent_limit;
    j["budgets"] = budgets;

    ordered_json cfg;
    cfg["sampler"] = report.config.sampler.text();
    cfg["inconsistency_threshold"] = report.config.inconsistency_threshold;
    cfg["ratio_tol"] = report.config.ratio_tol;
    cfg["grid_max"] = report.config.grid_max;
    cfg["elton_n"] = report.config.elton_n;
    cfg["elton_c"] = report.config.elton_c;
    cfg["signavg_window"] = report.config.signavg_window;
    cfg["democracy_window"] = report.config.democracy_window;
    cfg["ccu_n"] = report.config.ccu_n;
    cfg["profile_window"] = report.config.profile_window;
    cfg["shift_m"] = report.config.shift_m;
    cfg["shift_n"] = report.config.shift_n;
    j["config"] = cfg;

    j["classification_hint"] = report.classification_hint;

    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["skipped"] = c.skipped;
        if (c.skipped) jc["skip_reason"] = c.skip_reason;
        if (!c.verdict.empty()) jc["verdict"] = c.verdict;
        ordered_json scalars = ordered_json::object();
        for (const auto& [k, v] : c.scalars) scalars[k] = num(v);
        jc["scalars"] = scalars;
        ordered_json brackets = ordered_json::object();
        for (const auto& [k, v] : c.brackets) brackets[k] = bracket_json(v);
        jc["brackets"] = brackets;
        ordered_json profiles = ordered_json::object();
        for (const auto& [k, v] : c.profiles) {
            ordered_json arr = ordered_json::array();
            for (double x : v) arr.push_back(num(x));
            profiles[k] = arr;
        }
        jc["profiles"] = profiles;
        ordered_json wits = ordered_json::array();
        for (const auto& w : c.witnesses) wits.push_back(witness_json(w));
        jc["witnesses"] = wits;
        checks.push_back(jc);
    }
    j["checks"] = checks;

    if (include_timestamp) {
        ordered_json ts;
        ts["written_at"] = iso_now();
        double total = 0.0;
        ordered_json per = ordered_json::object();
        for (const auto& c : report.checks) {
            per[c.name] = c.runtime_ms;
            total += c.runtime_ms;
        }
        ts["total_ms"] = total;
        ts["per_check_ms"] = per;
        j["timestamp"] = ts;
    }
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

std::string report_profiles_csv(const SuiteReport& report) {
    std::string csv = "check,profile,index,value\n";
    for (const auto& c : report.checks)
        for (const auto& [pname, values] : c.profiles)
            for (std::size_t i = 0; i < values.size(); ++i)
                csv += c.name + "," + pname + "," + std::to_string(i + 1) + "," +
                       fmt12(values[i]) + "\n";
    return csv;
}

std::string report_lambda_csv(const SuiteReport& report) {
    const CheckRecord* table = nullptr;
    for (const auto& c : report.checks)
        if (c.name == "fundamental_table") table = &c;
    std::string csv = "n,lambda,phi,lambda_star_lower,lambda_star_upper,"
                      "phi_star_lower,phi_star_upper\n";
    if (!table || table->skipped) return csv;
    auto profile = [&](const std::string& name) -> const std::vector<double>* {
        for (const auto& [k, v] : table->profiles)
            if (k == name) return &v;
        return nullptr;
    };
    const auto* lambda = profile("lambda");
    const auto* phi = profile("phi");
    const auto* lsl = profile("lambda_star_lower");
    const auto* lsu = profile("lambda_star_upper");
    const auto* psl = profile("phi_star_lower");
    const auto* psu = profile("phi_star_upper");
    if (!lambda) return csv;
    for (std::size_t i = 0; i < lambda->size(); ++i) {
        csv += std::to_string(i + 1) + "," + fmt12((*lambda)[i]) + "," +
               fmt12((*phi)[i]) + "," + fmt12((*lsl)[i]) + "," + fmt12((*lsu)[i]) +
               "," + fmt12((*psl)[i]) + "," + fmt12((*psu)[i]) + "\n";
    }
    return csv;
}

std::string table_to_csv(const FundamentalTable& t) {
    std::string csv = "n,lambda,phi,phi_mode,lambda_star_lower,lambda_star_upper,"
                      "phi_star_lower,phi_star_upper\n";
    for (int n = 1; n <= t.window; ++n) {
        const std::size_t i = static_cast<std::size_t>(n) - 1;
        csv += std::to_string(n) + "," + fmt12(t.lambda[i]) + "," + fmt12(t.phi[i]) +
               "," + std::string(mode_token(t.phi_mode[i])) + "," +
               fmt12(t.lambda_star[i].lower) + "," + fmt12(t.lambda_star[i].upper) +
               "," + fmt12(t.phi_star[i].lower) + "," + fmt12(t.phi_star[i].upper) +
               "\n";
    }
    return csv;
}

std::string table_to_json(const FundamentalTable& t, const SpaceDescriptor& space) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["space"] = space.text();
    j["window"] = t.window;
    ordered_json rows = ordered_json::array();
    for (int n = 1; n <= t.window; ++n) {
        const std::size_t i = static_cast<std::size_t>(n) - 1;
        ordered_json row;
        row["n"] = n;
        row["lambda"] = num(t.lambda[i]);
        row["phi"] = num(t.phi[i]);
        row["phi_mode"] = std::string(mode_token(t.phi_mode[i]));
        row["lambda_star"] = bracket_json(t.lambda_star[i]);
        row["phi_star"] = bracket_json(t.phi_star[i]);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

ParsedReport parse_report_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    ParsedReport out;
    out.space_text = j.at("space").at("text").get<std::string>();
    out.classification_hint = j.at("classification_hint").get<std::string>();
    out.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jc : j.at("checks")) {
        const std::string name = jc.at("name").get<std::string>();
        for (const auto& jw : jc.at("witnesses")) {
            Witness w;
            w.kind = jw.at("kind").get<std::string>();
            for (const auto& [k, v] : jw.at("params").items())
                w.params[k] = num_back(v);
            w.ratio = num_back(jw.at("ratio"));
            for (const auto& vec : jw.at("vectors"))
                w.vectors.push_back(vec.get<std::vector<double>>());
            out.witnesses.emplace_back(name, std::move(w));
        }
    }
    return out;
}

} // namespace basislab
