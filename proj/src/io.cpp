#include "sharesim/io.hpp"

#include "sharesim/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sharesim::io {

namespace {

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || key == k;
        if (!ok) throw ValidationError(where + ": unknown field '" + key + "'");
    }
}

double get_number(const json& obj, const char* key, double fallback,
                  const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw ValidationError(where + ": field '" + key + "' must be a number");
    return obj[key].get<double>();
}

std::uint64_t get_uint(const json& obj, const char* key, std::uint64_t fallback,
                       const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_unsigned())
        throw ValidationError(where + ": field '" + key +
                              "' must be a non-negative integer");
    return obj[key].get<std::uint64_t>();
}

} // namespace

std::string format_g9(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", v);
    return buffer;
}

double quantize_g9(double v) { return std::strtod(format_g9(v).c_str(), nullptr); }

DependencyNetwork network_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("network document: expected an object");
    check_keys(doc, {"n", "edges"}, "network document");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"] == 0)
        throw ValidationError("network document: 'n' must be a positive integer");
    DependencyNetwork net(doc["n"].get<std::size_t>());
    const json edges = doc.value("edges", json::array());
    if (!edges.is_array())
        throw ValidationError("network document: 'edges' must be an array");
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        const json& e = edges[idx];
        const std::string where = "network document: edge " + std::to_string(idx);
        if (!e.is_object()) throw ValidationError(where + ": expected an object");
        check_keys(e, {"from", "to", "weight"}, where);
        if (!e.contains("from") || !e.contains("to") || !e.contains("weight"))
            throw ValidationError(where + ": needs 'from', 'to' and 'weight'");
        if (!e["from"].is_number_unsigned() || !e["to"].is_number_unsigned())
            throw ValidationError(where + ": node ids must be non-negative integers");
        if (!e["weight"].is_number())
            throw ValidationError(where + ": 'weight' must be a number");
        try {
            net.add_edge(e["from"].get<std::size_t>(), e["to"].get<std::size_t>(),
                         e["weight"].get<double>());
        } catch (const ValidationError& err) {
            throw ValidationError(where + ": " + err.what());
        }
    }
    return net;
}

json network_to_json(const DependencyNetwork& net) {
    json edges = json::array();
    for (const Edge& e : net.edges())
        edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
    return json{{"n", net.size()}, {"edges", std::move(edges)}};
}

DependencyNetwork load_network_file(const std::filesystem::path& path) {
    return network_from_json(load_json_file(path));
}

AttackCatalogue catalogue_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("impacts") || !doc["impacts"].is_array())
        throw ValidationError("catalogue document: expected { \"impacts\": [...] }");
    check_keys(doc, {"impacts"}, "catalogue document");
    AttackCatalogue cat;
    for (const json& v : doc["impacts"]) {
        if (!v.is_number())
            throw ValidationError("catalogue document: impacts must be numbers");
        cat.impacts.push_back(v.get<double>());
    }
    cat.validate();
    return cat;
}

json catalogue_to_json(const AttackCatalogue& catalogue) {
    return json{{"impacts", catalogue.impacts}};
}

NetworkGenSpec network_gen_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("network generator: expected an object");
    check_keys(doc, {"n", "attach_count", "edge_weight", "seed"}, "network generator");
    NetworkGenSpec spec;
    spec.n = get_uint(doc, "n", 0, "network generator");
    spec.attach_count = get_uint(doc, "attach_count", spec.attach_count, "network generator");
    spec.edge_weight = get_number(doc, "edge_weight", spec.edge_weight, "network generator");
    spec.seed = get_uint(doc, "seed", spec.seed, "network generator");
    spec.validate();
    return spec;
}

json network_gen_to_json(const NetworkGenSpec& spec) {
    return json{{"n", spec.n},
                {"attach_count", spec.attach_count},
                {"edge_weight", spec.edge_weight},
                {"seed", spec.seed}};
}

namespace {

TargetStrategy strategy_from_string(const std::string& s) {
    if (s == "random_fraction") return TargetStrategy::RandomFraction;
    if (s == "proportional_in_degree") return TargetStrategy::ProportionalInDegree;
    if (s == "proportional_out_degree") return TargetStrategy::ProportionalOutDegree;
    throw ValidationError(
        "attack scenario: strategy must be one of random_fraction, "
        "proportional_in_degree, proportional_out_degree; got '" + s + "'");
}

std::string strategy_to_string(TargetStrategy s) {
    switch (s) {
    case TargetStrategy::RandomFraction: return "random_fraction";
    case TargetStrategy::ProportionalInDegree: return "proportional_in_degree";
    case TargetStrategy::ProportionalOutDegree: return "proportional_out_degree";
    }
    return "random_fraction";
}

AttackScenarioSpec scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("attack scenario: expected an object");
    check_keys(doc,
               {"strategy", "active_fraction", "target_fraction", "floor_probability",
                "catalogue_size", "impact_mean", "impact_sd", "impact_min", "impact_max"},
               "attack scenario");
    AttackScenarioSpec spec;
    if (doc.contains("strategy")) {
        if (!doc["strategy"].is_string())
            throw ValidationError("attack scenario: 'strategy' must be a string");
        spec.strategy = strategy_from_string(doc["strategy"].get<std::string>());
    }
    spec.active_fraction =
        get_number(doc, "active_fraction", spec.active_fraction, "attack scenario");
    spec.target_fraction =
        get_number(doc, "target_fraction", spec.target_fraction, "attack scenario");
    spec.floor_probability =
        get_number(doc, "floor_probability", spec.floor_probability, "attack scenario");
    spec.catalogue_size =
        get_uint(doc, "catalogue_size", spec.catalogue_size, "attack scenario");
    spec.impact_mean = get_number(doc, "impact_mean", spec.impact_mean, "attack scenario");
    spec.impact_sd = get_number(doc, "impact_sd", spec.impact_sd, "attack scenario");
    spec.impact_min = get_number(doc, "impact_min", spec.impact_min, "attack scenario");
    spec.impact_max = get_number(doc, "impact_max", spec.impact_max, "attack scenario");
    spec.validate();
    return spec;
}

json scenario_to_json(const AttackScenarioSpec& spec) {
    return json{{"strategy", strategy_to_string(spec.strategy)},
                {"active_fraction", spec.active_fraction},
                {"target_fraction", spec.target_fraction},
                {"floor_probability", spec.floor_probability},
                {"catalogue_size", spec.catalogue_size},
                {"impact_mean", spec.impact_mean},
                {"impact_sd", spec.impact_sd},
                {"impact_min", spec.impact_min},
                {"impact_max", spec.impact_max}};
}

SharingPolicy policy_from_json(const json& doc) {
    SharingPolicy policy;
    if (doc.is_string()) {
        const std::string s = doc.get<std::string>();
        if (s == "none") {
            policy.kind = SharingPolicy::Kind::NoOne;
        } else if (s == "all_deps") {
            policy.kind = SharingPolicy::Kind::AllDependencies;
        } else if (s == "broadcast") {
            policy.kind = SharingPolicy::Kind::Broadcast;
        } else {
            throw ValidationError("sharing_policy: expected 'none', 'all_deps', "
                                  "'broadcast' or {\"top_deps\": fraction}; got '" +
                                  s + "'");
        }
    } else if (doc.is_object() && doc.contains("top_deps") && doc.size() == 1 &&
               doc["top_deps"].is_number()) {
        policy.kind = SharingPolicy::Kind::TopDependencyFraction;
        policy.fraction = doc["top_deps"].get<double>();
    } else {
        throw ValidationError("sharing_policy: expected 'none', 'all_deps', 'broadcast' "
                              "or {\"top_deps\": fraction}");
    }
    policy.validate();
    return policy;
}

json policy_to_json(const SharingPolicy& policy) {
    switch (policy.kind) {
    case SharingPolicy::Kind::NoOne: return "none";
    case SharingPolicy::Kind::AllDependencies: return "all_deps";
    case SharingPolicy::Kind::Broadcast: return "broadcast";
    case SharingPolicy::Kind::TopDependencyFraction:
        return json{{"top_deps", policy.fraction}};
    }
    return "none";
}

} // namespace

RunConfig run_config_from_json(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ValidationError("run config: expected an object");
    check_keys(doc,
               {"network", "attack", "catalogue", "sharing_policy", "epochs",
                "simulations", "master_seed", "initial_cia", "initial_trust",
                "initial_reputation", "cost_coefficient", "reputation_reward",
                "reputation_punish"},
               "run config");
    RunConfig config;

    if (!doc.contains("network") || !doc["network"].is_object())
        throw ValidationError("run config: 'network' object is required");
    const json& net = doc["network"];
    check_keys(net, {"generate", "file", "inline"}, "run config: network");
    if (net.size() != 1)
        throw ValidationError(
            "run config: network needs exactly one of 'generate', 'file', 'inline'");
    if (net.contains("generate")) {
        config.network_gen = network_gen_from_json(net["generate"]);
    } else if (net.contains("inline")) {
        config.network = network_from_json(net["inline"]);
    } else {
        if (!net["file"].is_string())
            throw ValidationError("run config: network 'file' must be a path string");
        std::filesystem::path p = net["file"].get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        config.network = load_network_file(p);
    }

    if (doc.contains("attack")) config.scenario = scenario_from_json(doc["attack"]);
    if (doc.contains("sharing_policy"))
        config.policy = policy_from_json(doc["sharing_policy"]);
    if (doc.contains("catalogue"))
        config.catalogue_impacts = catalogue_from_json(doc["catalogue"]).impacts;

    config.epochs = get_uint(doc, "epochs", config.epochs, "run config");
    config.simulations = get_uint(doc, "simulations", config.simulations, "run config");
    config.master_seed = get_uint(doc, "master_seed", config.master_seed, "run config");
    config.initial_cia = get_number(doc, "initial_cia", config.initial_cia, "run config");
    config.initial_trust =
        get_number(doc, "initial_trust", config.initial_trust, "run config");
    config.initial_reputation =
        get_number(doc, "initial_reputation", config.initial_reputation, "run config");
    config.cost_coefficient =
        get_number(doc, "cost_coefficient", config.cost_coefficient, "run config");
    config.reputation_reward =
        get_number(doc, "reputation_reward", config.reputation_reward, "run config");
    config.reputation_punish =
        get_number(doc, "reputation_punish", config.reputation_punish, "run config");
    config.validate();
    return config;
}

RunConfig load_run_config_file(const std::filesystem::path& path) {
    return run_config_from_json(load_json_file(path), path.parent_path());
}

json run_config_to_json(const RunConfig& config) {
    json net;
    if (config.network_gen) {
        net = json{{"generate", network_gen_to_json(*config.network_gen)}};
    } else {
        net = json{{"inline", network_to_json(*config.network)}};
    }
    json doc{{"network", std::move(net)},
             {"attack", scenario_to_json(config.scenario)},
             {"sharing_policy", policy_to_json(config.policy)},
             {"epochs", config.epochs},
             {"simulations", config.simulations},
             {"master_seed", config.master_seed},
             {"initial_cia", config.initial_cia},
             {"initial_trust", config.initial_trust},
             {"initial_reputation", config.initial_reputation},
             {"cost_coefficient", config.cost_coefficient},
             {"reputation_reward", config.reputation_reward},
             {"reputation_punish", config.reputation_punish}};
    if (config.catalogue_impacts)
        doc["catalogue"] = json{{"impacts", *config.catalogue_impacts}};
    return doc;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw ValidationError("parse error in '" + path.string() + "': " + err.what());
    }
}

void write_json_file(const json& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

namespace {

constexpr const char* kRunTableHeader =
    "epoch,sim,node,cia,attacked,attack_id,shared_count,mean_payoff,q_in,q_out";

std::string sim_table_name(std::size_t index) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "sim_%03zu.csv", index);
    return buffer;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::ifstream open_table(const std::filesystem::path& path, const char* header) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw ValidationError("'" + path.string() + "': expected header '" +
                              std::string(header) + "'");
    return in;
}

double parse_double(const std::string& field, const std::filesystem::path& path) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0')
        throw ValidationError("'" + path.string() + "': bad number '" + field + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& field, const std::filesystem::path& path) {
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(field.c_str(), &end, 10);
    if (end == field.c_str() || *end != '\0')
        throw ValidationError("'" + path.string() + "': bad integer '" + field + "'");
    return v;
}

std::int64_t parse_i64(const std::string& field, const std::filesystem::path& path) {
    char* end = nullptr;
    const std::int64_t v = std::strtoll(field.c_str(), &end, 10);
    if (end == field.c_str() || *end != '\0')
        throw ValidationError("'" + path.string() + "': bad integer '" + field + "'");
    return v;
}

} // namespace

void export_run(const RunResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    json sims = json::array();
    for (std::size_t s = 0; s < result.sims.size(); ++s) {
        const SimulationRun& sim = result.sims[s];
        sims.push_back({{"index", s},
                        {"attack_seed", sim.attack_seed},
                        {"aux_seed", sim.aux_seed},
                        {"catalogue", sim.catalogue.impacts},
                        {"table", sim_table_name(s)}});
    }
    json summary{{"format_version", 1},
                 {"config", run_config_to_json(result.config)},
                 {"n", result.network.size()},
                 {"epochs", result.config.epochs},
                 {"simulations", result.sims.size()},
                 {"sims", std::move(sims)}};
    write_json_file(summary, dir / "summary.json");

    const std::size_t n = result.network.size();
    for (std::size_t s = 0; s < result.sims.size(); ++s) {
        const SimulationRun& sim = result.sims[s];
        std::ofstream out(dir / sim_table_name(s), std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" +
                                     (dir / sim_table_name(s)).string() + "'");
        out << kRunTableHeader << '\n';
        for (const EpochRecord& rec : sim.epochs) {
            for (std::size_t i = 0; i < n; ++i) {
                out << rec.epoch << ',' << s << ',' << i << ','
                    << format_g9(rec.values[i]) << ',' << (rec.attack_of[i] >= 0 ? 1 : 0)
                    << ',' << rec.attack_of[i] << ',' << rec.shared_count[i] << ','
                    << format_g9(rec.mean_payoff[i]) << ',' << rec.q_in[i] << ','
                    << rec.q_out[i] << '\n';
            }
        }
        if (!out) throw std::runtime_error("write failed in '" + dir.string() + "'");
    }
}

RunResult import_run(const std::filesystem::path& dir) {
    const json summary = load_json_file(dir / "summary.json");
    if (!summary.is_object() || !summary.contains("config"))
        throw ValidationError("'" + (dir / "summary.json").string() +
                              "': missing 'config'");

    RunResult result;
    result.config = run_config_from_json(summary["config"]);
    result.network = resolve_network(result.config);
    const std::size_t n = result.network.size();
    const std::size_t epochs = result.config.epochs;

    if (!summary.contains("sims") || !summary["sims"].is_array())
        throw ValidationError("'" + (dir / "summary.json").string() + "': missing 'sims'");

    for (const json& sim_info : summary["sims"]) {
        SimulationRun sim;
        sim.attack_seed = sim_info.at("attack_seed").get<std::uint64_t>();
        sim.aux_seed = sim_info.at("aux_seed").get<std::uint64_t>();
        sim.catalogue.impacts = sim_info.at("catalogue").get<std::vector<double>>();

        const std::filesystem::path table =
            dir / sim_info.at("table").get<std::string>();
        std::ifstream in = open_table(table, kRunTableHeader);
        sim.epochs.assign(epochs, EpochRecord{});
        for (EpochRecord& rec : sim.epochs) {
            rec.values.assign(n, 0.0);
            rec.attack_of.assign(n, -1);
            rec.shared_count.assign(n, 0);
            rec.mean_payoff.assign(n, 0.0);
            rec.q_in.assign(n, 0);
            rec.q_out.assign(n, 0);
        }
        std::string line;
        std::size_t rows = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto fields = split_csv_line(line);
            if (fields.size() != 10)
                throw ValidationError("'" + table.string() + "': expected 10 columns");
            const std::size_t epoch = parse_u64(fields[0], table);
            const std::size_t node = parse_u64(fields[2], table);
            if (epoch == 0 || epoch > epochs || node >= n)
                throw ValidationError("'" + table.string() + "': row out of range");
            EpochRecord& rec = sim.epochs[epoch - 1];
            rec.epoch = static_cast<std::uint32_t>(epoch);
            rec.values[node] = parse_double(fields[3], table);
            rec.attack_of[node] = static_cast<std::int32_t>(parse_i64(fields[5], table));
            rec.shared_count[node] =
                static_cast<std::uint32_t>(parse_u64(fields[6], table));
            rec.mean_payoff[node] = parse_double(fields[7], table);
            rec.q_in[node] = parse_u64(fields[8], table);
            rec.q_out[node] = parse_u64(fields[9], table);
            ++rows;
        }
        if (rows != epochs * n)
            throw ValidationError("'" + table.string() + "': expected " +
                                  std::to_string(epochs * n) + " rows, found " +
                                  std::to_string(rows));
        result.sims.push_back(std::move(sim));
    }
    return result;
}

void export_mean_cia(const MeanCiaSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "epoch,mean_cia\n";
    for (std::size_t t = 0; t < series.per_epoch.size(); ++t)
        out << (t + 1) << ',' << format_g9(series.per_epoch[t]) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

MeanCiaSeries import_mean_cia(const std::filesystem::path& path) {
    std::ifstream in = open_table(path, "epoch,mean_cia");
    MeanCiaSeries series;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 2)
            throw ValidationError("'" + path.string() + "': expected 2 columns");
        if (parse_u64(fields[0], path) != series.per_epoch.size() + 1)
            throw ValidationError("'" + path.string() + "': epochs out of order");
        series.per_epoch.push_back(parse_double(fields[1], path));
    }
    return series;
}

void export_gain(const GainVector& gains, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "epoch,node,gain\n";
    for (std::size_t i = 0; i < gains.g.size(); ++i)
        out << gains.epoch << ',' << i << ',' << format_g9(gains.g[i]) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

GainVector import_gain(const std::filesystem::path& path) {
    std::ifstream in = open_table(path, "epoch,node,gain");
    GainVector gains;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ValidationError("'" + path.string() + "': expected 3 columns");
        gains.epoch = static_cast<std::uint32_t>(parse_u64(fields[0], path));
        if (parse_u64(fields[1], path) != gains.g.size())
            throw ValidationError("'" + path.string() + "': nodes out of order");
        gains.g.push_back(parse_double(fields[2], path));
    }
    return gains;
}

void export_quality(const QualityReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "node,q_in,q_out,gain,benefits\n";
    for (const QualityReport::Row& row : report.rows)
        out << row.node << ',' << row.q_in << ',' << row.q_out << ','
            << format_g9(row.gain) << ',' << (row.benefits ? 1 : 0) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

QualityReport import_quality(const std::filesystem::path& path) {
    std::ifstream in = open_table(path, "node,q_in,q_out,gain,benefits");
    QualityReport report;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw ValidationError("'" + path.string() + "': expected 5 columns");
        QualityReport::Row row;
        row.node = static_cast<std::uint32_t>(parse_u64(fields[0], path));
        row.q_in = parse_u64(fields[1], path);
        row.q_out = parse_u64(fields[2], path);
        row.gain = parse_double(fields[3], path);
        row.benefits = parse_u64(fields[4], path) != 0;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace sharesim::io
