#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "levyfp/grids.hpp"

#include "json.hpp"

namespace levyfp {

// Shortest round-trippable decimal form; keeps re-runs bit-identical.
std::string format_double(double v);

std::uint64_t fnv1a_hash(const std::string& text);

// CSV with a '#' metadata comment block followed by a header line.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

// Two-column x,value dump plus a .json sidecar with the provenance metadata.
void write_profile_csv(const std::filesystem::path& path, const DensityProfile& profile,
                       const std::vector<std::string>& comments);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

// Companion gnuplot script plotting the first two CSV columns.
void write_gnuplot_script(const std::filesystem::path& csv_path, const std::string& title,
                          bool log_x, bool log_y);

}  // namespace levyfp
