#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace fplab {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

// A concrete input tuple demonstrating the failure of a checked inequality.
// The meaning of `inputs` depends on the check: (x,y,z) for triangle,
// (x,y,n) for contraction inequalities, (t) or (b) for class membership.
struct Witness {
    std::vector<double> inputs;
    double lhs = 0.0;
    double rhs = 0.0;

    double violation() const { return lhs - rhs; }
};

// Shared report shape for axiom checks (AxiomReport) and hypothesis checks
// (HypothesisReport). PASS means "no violation on the sample"; FAIL carries
// re-checkable witnesses; INCONCLUSIVE means the sample could not exercise
// the property.
struct Report {
    std::string check;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Witness> witnesses;
    long long samples_checked = 0;
    double tolerance = 0.0;
    int n_max = 0;
    std::vector<double> series;                       // e.g. sup-gap sequence
    std::vector<std::pair<double, double>> eps_delta; // uniformity ladder table
    std::string detail;
};

using AxiomReport = Report;
using HypothesisReport = Report;

// Deterministic witness order: largest violation first, ties broken
// lexicographically by inputs.
inline void sort_witnesses(std::vector<Witness>& ws) {
    std::stable_sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
        if (a.violation() != b.violation()) return a.violation() > b.violation();
        return a.inputs < b.inputs;
    });
}

inline void keep_worst(std::vector<Witness>& ws, std::size_t cap) {
    sort_witnesses(ws);
    if (ws.size() > cap) ws.resize(cap);
}

} // namespace fplab
