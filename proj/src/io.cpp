#include "levyfp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace levyfp {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::uint64_t fnv1a_hash(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot open output file: " + path.string());
    }
    return out;
}

}  // namespace

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_out(path);
    for (const auto& c : comments) out << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << columns[i] << (i + 1 < columns.size() ? "," : "");
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        }
        out << "\n";
    }
}

void write_profile_csv(const std::filesystem::path& path, const DensityProfile& profile,
                       const std::vector<std::string>& comments) {
    std::vector<std::vector<double>> rows;
    rows.reserve(profile.values.size());
    for (int j = 0; j < profile.grid.n_points; ++j) {
        rows.push_back({profile.grid.x(j), profile.values[j]});
    }
    write_csv(path, comments, {"x", "value"}, rows);

    nlohmann::json meta;
    meta["kernel_id"] = profile.meta.kernel_id;
    if (std::isfinite(profile.meta.epsilon)) meta["epsilon"] = profile.meta.epsilon;
    if (std::isfinite(profile.meta.s)) meta["s"] = profile.meta.s;
    if (std::isfinite(profile.meta.t)) meta["t"] = profile.meta.t;
    meta["n_points"] = profile.grid.n_points;
    meta["half_width"] = profile.grid.half_width;
    if (profile.tail) {
        meta["tail"] = {{"coefficient", profile.tail->coefficient},
                        {"exponent", profile.tail->exponent}};
    }
    std::filesystem::path sidecar = path;
    sidecar.replace_extension(".json");
    write_json(sidecar, meta);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
    std::ofstream out = open_out(path);
    out << doc.dump(2) << "\n";
}

void write_gnuplot_script(const std::filesystem::path& csv_path, const std::string& title,
                          bool log_x, bool log_y) {
    std::filesystem::path gp = csv_path;
    gp.replace_extension(".gp");
    std::ofstream out = open_out(gp);
    out << "set datafile separator ','\n";
    out << "set title '" << title << "'\n";
    out << "set key off\n";
    if (log_x) out << "set logscale x\n";
    if (log_y) out << "set logscale y\n";
    out << "plot '" << csv_path.filename().string() << "' using 1:2 with linespoints\n";
}

}  // namespace levyfp
