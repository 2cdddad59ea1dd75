#pragma once

#include "fplab/axioms.hpp"
#include "fplab/compfun.hpp"
#include "fplab/contraction.hpp"
#include "fplab/distance.hpp"
#include "fplab/domain.hpp"
#include "fplab/selfmap.hpp"
#include "fplab/solver.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fplab {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

class ScenarioError : public std::runtime_error {
public:
    ScenarioError(const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(msg), line(line), col(col) {}
    int line;
    int col;
};

struct DistanceSpec {
    std::string builtin; // euclidean | range-projection | max-pair, or empty
    std::string name;    // expression distances
    std::string expr;
    bool symmetric = false;
    bool reflexive = false;
};

struct SolverSpec {
    std::vector<double> starts;
    double tol = 1e-9;
    int max_iter = 10000;
    int window = 3;
};

struct ContrastSpec {
    DistanceSpec distance;
    std::optional<int> count; // grid override for the contrast run
};

enum class HypKind { None, BoydWong, Asymptotic, Corollary25 };

struct Scenario {
    std::string name;
    std::string notes;
    Domain domain;
    std::optional<SelfMap> map;
    DistanceSpec distance_spec;
    HypKind hyp_kind = HypKind::None;
    std::optional<ScalarFunc> hyp_func;     // psi (Boyd-Wong) or phi (corollary)
    std::optional<PhiSequence> hyp_seq;     // asymptotic
    std::vector<std::string> checks;
    int n_max = 16;
    double tol = 1e-9;
    std::vector<double> eps_grid = {0.5, 0.1};
    std::optional<SolverSpec> solver;
    std::optional<ContrastSpec> contrast;

    DistanceStructure distance() const;
};

Scenario parse_scenario(const std::string& text);
nlohmann::json serialize_scenario(const Scenario& s);

struct RunOptions {
    std::optional<double> tol;
    std::optional<int> n_max;
    std::optional<int> grid_count;
    std::optional<std::uint64_t> seed;
    bool timings = false;
};

// Executes the requested checks in the fixed documented order, then the
// solver; FAIL verdicts are results, never aborts.
nlohmann::json run_scenario(const Scenario& s, const RunOptions& opt = {});

std::string report_to_string(const nlohmann::json& report);

// Built-in scenario corpus. FPLAB_CORPUS_DIR overrides with *.json files on
// disk (looked up by name).
std::vector<std::string> corpus_list();
std::string corpus_text(const std::string& name);

const std::vector<std::string>& check_registry();

} // namespace fplab
