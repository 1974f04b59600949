#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levyfp/gclt.hpp"
#include "levyfp/kernels.hpp"

#include "json.hpp"

namespace levyfp {

// One JSON document drives every experiment. Unknown keys are rejected so a
// typo cannot silently fall back to a default.
struct RunConfig {
    struct KernelBlock {
        std::string family = "stable";
        std::optional<double> delta, c0, tail_const, tail_radius, psi_variance;
    };
    struct GridBlock {
        int n_points = 1 << 14;
        double half_width = 200.0;
    };
    struct TimeBlock {
        std::vector<double> t_list;  // wins over t_max/steps when nonempty
        double t_max = 8.0;
        int steps = 16;

        std::vector<double> resolve() const;
    };
    struct WeightsBlock {
        double k = 0.5;
        double m = 0.75;
        double big_m = 1.0;
    };
    struct WildBlock {
        int samples = 10000;
        int truncation_order = 24;
        int probes = 20;
    };
    struct GcltBlock {
        std::vector<int> n_list{64, 128, 256, 512, 1024};
        std::string scales_policy = "constant";  // constant | uniform-random | alternating
    };

    KernelBlock kernel;
    std::vector<double> epsilons{1.0};
    std::vector<double> s_values{0.75};
    GridBlock grid;
    TimeBlock times;
    WeightsBlock weights;
    WildBlock wild;
    GcltBlock gclt;
    std::uint64_t seed = 1234;
    std::string output_dir;
    std::string name = "experiment";

    static RunConfig from_json(const nlohmann::json& doc);
    static RunConfig from_file(const std::string& path);

    nlohmann::json to_json() const;
    std::uint64_t hash() const;

    Grid1D make_grid() const;
    KernelSpec make_kernel(double s) const;
    KernelFamily family() const;

    // 0 < k < m <= M <= 1, epsilons in (0,1], s values in (1/2,1).
    void validate() const;

    // Guard for the classical-limit experiments: eps <= sqrt(2/(4+2 delta+d)).
    double epsilon_max_for_s_limit(double d = 1.0) const;
};

ScalesPolicy scales_policy_from_name(const std::string& name);

}  // namespace levyfp
