#include "levyfp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "levyfp/io.hpp"

namespace levyfp {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key())) {
            throw ConfigError("unknown config key '" + it.key() + "' in " + where);
        }
    }
}

template <class T>
void read(const json& obj, const char* key, T& target) {
    if (obj.contains(key)) target = obj.at(key).get<T>();
}

template <class T>
void read(const json& obj, const char* key, std::optional<T>& target) {
    if (obj.contains(key)) target = obj.at(key).get<T>();
}

}  // namespace

std::vector<double> RunConfig::TimeBlock::resolve() const {
    if (!t_list.empty()) return t_list;
    std::vector<double> out;
    for (int i = 1; i <= steps; ++i) {
        out.push_back(t_max * static_cast<double>(i) / steps);
    }
    return out;
}

RunConfig RunConfig::from_json(const json& doc) {
    RunConfig cfg;
    reject_unknown(doc,
                   {"kernel", "epsilons", "s_values", "grid", "times", "weights", "wild",
                    "gclt", "seed", "output_dir", "name"},
                   "config root");
    if (doc.contains("kernel")) {
        const json& k = doc.at("kernel");
        reject_unknown(k, {"family", "delta", "c0", "tail_const", "tail_radius", "psi_variance"},
                       "kernel block");
        read(k, "family", cfg.kernel.family);
        read(k, "delta", cfg.kernel.delta);
        read(k, "c0", cfg.kernel.c0);
        read(k, "tail_const", cfg.kernel.tail_const);
        read(k, "tail_radius", cfg.kernel.tail_radius);
        read(k, "psi_variance", cfg.kernel.psi_variance);
        family_from_name(cfg.kernel.family);  // validates the name
    }
    read(doc, "epsilons", cfg.epsilons);
    read(doc, "s_values", cfg.s_values);
    if (doc.contains("grid")) {
        const json& g = doc.at("grid");
        reject_unknown(g, {"n_points", "half_width"}, "grid block");
        read(g, "n_points", cfg.grid.n_points);
        read(g, "half_width", cfg.grid.half_width);
    }
    if (doc.contains("times")) {
        const json& t = doc.at("times");
        reject_unknown(t, {"t_list", "t_max", "steps"}, "times block");
        read(t, "t_list", cfg.times.t_list);
        read(t, "t_max", cfg.times.t_max);
        read(t, "steps", cfg.times.steps);
    }
    if (doc.contains("weights")) {
        const json& w = doc.at("weights");
        reject_unknown(w, {"k", "m", "M"}, "weights block");
        read(w, "k", cfg.weights.k);
        read(w, "m", cfg.weights.m);
        read(w, "M", cfg.weights.big_m);
    }
    if (doc.contains("wild")) {
        const json& w = doc.at("wild");
        reject_unknown(w, {"samples", "truncation_order", "probes"}, "wild block");
        read(w, "samples", cfg.wild.samples);
        read(w, "truncation_order", cfg.wild.truncation_order);
        read(w, "probes", cfg.wild.probes);
    }
    if (doc.contains("gclt")) {
        const json& g = doc.at("gclt");
        reject_unknown(g, {"n_list", "scales_policy"}, "gclt block");
        read(g, "n_list", cfg.gclt.n_list);
        read(g, "scales_policy", cfg.gclt.scales_policy);
        scales_policy_from_name(cfg.gclt.scales_policy);
    }
    read(doc, "seed", cfg.seed);
    read(doc, "output_dir", cfg.output_dir);
    read(doc, "name", cfg.name);
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return from_json(doc);
}

json RunConfig::to_json() const {
    json doc;
    json k;
    k["family"] = kernel.family;
    if (kernel.delta) k["delta"] = *kernel.delta;
    if (kernel.c0) k["c0"] = *kernel.c0;
    if (kernel.tail_const) k["tail_const"] = *kernel.tail_const;
    if (kernel.tail_radius) k["tail_radius"] = *kernel.tail_radius;
    if (kernel.psi_variance) k["psi_variance"] = *kernel.psi_variance;
    doc["kernel"] = k;
    doc["epsilons"] = epsilons;
    doc["s_values"] = s_values;
    doc["grid"] = {{"n_points", grid.n_points}, {"half_width", grid.half_width}};
    doc["times"] = {{"t_list", times.t_list}, {"t_max", times.t_max}, {"steps", times.steps}};
    doc["weights"] = {{"k", weights.k}, {"m", weights.m}, {"M", weights.big_m}};
    doc["wild"] = {{"samples", wild.samples},
                   {"truncation_order", wild.truncation_order},
                   {"probes", wild.probes}};
    doc["gclt"] = {{"n_list", gclt.n_list}, {"scales_policy", gclt.scales_policy}};
    doc["seed"] = seed;
    doc["output_dir"] = output_dir;
    doc["name"] = name;
    return doc;
}

std::uint64_t RunConfig::hash() const { return fnv1a_hash(to_json().dump()); }

Grid1D RunConfig::make_grid() const { return Grid1D::make(grid.n_points, grid.half_width); }

KernelFamily RunConfig::family() const { return family_from_name(kernel.family); }

KernelSpec RunConfig::make_kernel(double s) const {
    if (s == 1.0) return KernelSpec::classical(family());
    KernelSpec base = KernelSpec::make(family(), s);
    KernelConstants constants{kernel.delta.value_or(base.delta()), kernel.c0.value_or(base.c0()),
                              kernel.tail_const.value_or(base.tail_const()),
                              kernel.tail_radius.value_or(base.tail_radius()),
                              kernel.psi_variance.value_or(base.psi_variance())};
    return KernelSpec::make(family(), s, constants);
}

void RunConfig::validate() const {
    if (!(weights.k > 0.0 && weights.k < weights.m && weights.m <= weights.big_m &&
          weights.big_m <= 1.0)) {
        throw ConfigError("weights block must satisfy 0 < k < m <= M <= 1");
    }
    if (epsilons.empty() || s_values.empty()) {
        throw ConfigError("epsilons and s_values must be nonempty");
    }
    for (double e : epsilons) {
        if (!(e > 0.0 && e <= 1.0)) throw ConfigError("every epsilon must lie in (0, 1]");
    }
    for (double s : s_values) {
        if (!(s > 0.5 && s < 1.0)) throw ConfigError("every s must lie in (1/2, 1)");
    }
    if (times.steps < 1 || !(times.t_max > 0.0)) {
        throw ConfigError("times block must have t_max > 0 and steps >= 1");
    }
    for (double t : times.t_list) {
        if (t < 0.0) throw ConfigError("t_list entries must be nonnegative");
    }
    try {
        Grid1D::make(grid.n_points, grid.half_width);
    } catch (const GridError& e) {
        throw ConfigError(e.what());
    }
    if (wild.samples < 1 || wild.truncation_order < 0 || wild.probes < 1) {
        throw ConfigError("wild block entries must be positive");
    }
    for (int n : gclt.n_list) {
        if (n < 1) throw ConfigError("gclt n_list entries must be >= 1");
    }
}

double RunConfig::epsilon_max_for_s_limit(double d) const {
    const double delta = kernel.delta.value_or(1.0);
    return std::sqrt(2.0 / (4.0 + 2.0 * delta + d));
}

ScalesPolicy scales_policy_from_name(const std::string& name) {
    if (name == "constant") return ScalesPolicy::Constant;
    if (name == "uniform-random") return ScalesPolicy::UniformRandom;
    if (name == "alternating") return ScalesPolicy::Alternating;
    throw ConfigError("unknown scales policy: " + name);
}

}  // namespace levyfp
