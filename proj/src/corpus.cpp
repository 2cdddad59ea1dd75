#include <cstddef>
#include <utility>

namespace fplab {

// Built-in scenario corpus. Kept as plain JSON text so the same documents can
// be exported, diffed, and overridden from disk via FPLAB_CORPUS_DIR.
extern const std::pair<const char*, const char*> kCorpus[];
extern const std::size_t kCorpusSize;

const std::pair<const char*, const char*> kCorpus[] = {
    {"example_2_2", R"json({
  "name": "example_2_2",
  "notes": "Separation example: the asymptotic inequality holds for the range-projection distance but fails for the Euclidean metric at the pair (1/2, 1).",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": 1.0, "expr": "0"}, {"from": 1.0, "to": 1.0, "expr": "1/8"}]},
  "distance": {"builtin": "range-projection"},
  "hypothesis": {"asymptotic": {
    "prefix": [{"name": "phi_1", "pieces": [{"from": 0.0, "to": 1.0, "expr": "1/16"}, {"from": 1.0, "to": null, "expr": "1/8"}]}],
    "tail": {"constant": "t/2"},
    "limit": "t/2"}},
  "checks": ["triangle", "uniformity", "p_bounded", "phi_class", "psi_class", "tail_continuity", "uniform_convergence", "p_continuity", "asymptotic", "pair_decay", "select_theorem", "uniqueness"],
  "n_max": 5,
  "contrast": {"distance": {"builtin": "euclidean"}, "count": 3},
  "solver": {"starts": [0.0, 0.5, 1.0], "tol": 1e-9, "max_iter": 50, "window": 3}
})json"},
    {"example_2_3", R"json({
  "name": "example_2_3",
  "notes": "Fixed-point-free map T0 = 1, Tx = 0 for x > 0. The original example claims the asymptotic inequality holds with phi_1 = 1 and an arbitrary continuous tail, but direct orbit evaluation gives p(T^2 x, T^2 y) = T^2 y = 1 > phi_2(y) = y/2 for y in (0,1]. The computed FAIL verdict at n = 2 is recorded as-is; the claim would need phi_n >= 1 on (0,1] for every n, which any tail with phi(t) < t violates.",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": 0.0, "expr": "1"}, {"from": 0.0, "to": 1.0, "expr": "0"}]},
  "distance": {"builtin": "range-projection"},
  "hypothesis": {"asymptotic": {"prefix": ["1"], "tail": {"constant": "t/2"}, "limit": "t/2"}},
  "checks": ["asymptotic", "p_continuity", "pair_decay", "uniqueness", "select_theorem"],
  "n_max": 5,
  "solver": {"starts": [0.0, 0.5], "tol": 1e-9, "max_iter": 64, "window": 3}
})json"},
    {"example_3_4", R"json({
  "name": "example_3_4",
  "notes": "Boyd-Wong separation: the one-step inequality holds for p(x,y) = max{x,y} with psi(t) = t/4 but fails for the Euclidean metric at the pair (3/4, 1).",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": 1.0, "expr": "0"}, {"from": 1.0, "to": 1.0, "expr": "1/4"}]},
  "distance": {"builtin": "max-pair"},
  "hypothesis": {"boyd_wong": {"psi": "t/4"}},
  "checks": ["triangle", "uniformity", "p_bounded", "phi_class", "psi_class", "p_continuity", "boyd_wong", "pair_decay", "bw_monotonicity", "select_theorem", "uniqueness"],
  "n_max": 16,
  "contrast": {"distance": {"builtin": "euclidean"}, "count": 5},
  "solver": {"starts": [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0], "tol": 1e-9, "max_iter": 50, "window": 3}
})json"},
    {"psi_step", R"json({
  "name": "psi_step",
  "notes": "Step function: upper semicontinuous from the right but not continuous; passes the Psi check and fails the Phi check.",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "distance": {"builtin": "euclidean"},
  "hypothesis": {"boyd_wong": {"psi": {"name": "psi_step", "pieces": [{"from": 0.0, "to": 1.0, "expr": "0"}, {"from": 1.0, "to": null, "expr": "1/2"}]}}},
  "checks": ["phi_class", "psi_class"]
})json"},
    {"psi_not_vanishing", R"json({
  "name": "psi_not_vanishing",
  "notes": "Right upper semicontinuity plus psi(t) < t for t > 0 do not force psi(0) = 0: this psi takes the value 0.3 at 0 and fails the Psi check exactly there.",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "distance": {"builtin": "euclidean"},
  "hypothesis": {"boyd_wong": {"psi": {"name": "psi_a", "pieces": [{"from": 0.0, "to": 0.0, "expr": "0.3"}, {"from": 0.0, "to": 1.0, "expr": "t/2"}, {"from": 1.0, "to": null, "expr": "1/(2*t)"}]}}},
  "checks": ["phi_class", "psi_class"]
})json"},
    {"corollary_2_5_halving", R"json({
  "name": "corollary_2_5_halving",
  "notes": "Halving map with phi(t) = t/2: the nondecreasing-comparison corollary applies and Picard iteration halves toward 0.",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": null, "expr": "x/2"}]},
  "distance": {"builtin": "euclidean"},
  "hypothesis": {"corollary_2_5": {"phi": "t/2"}},
  "checks": ["p_bounded", "phi_class", "corollary_2_5", "pair_decay", "uniqueness"],
  "n_max": 60,
  "solver": {"starts": [0.0, 0.5, 1.0], "tol": 1e-9, "max_iter": 100, "window": 3}
})json"},
    {"affine_oracle", R"json({
  "name": "affine_oracle",
  "notes": "Affine contraction x/2 + 1 on [0,4] with closed-form iterates x_n = 2 - (2 - x0) * 2^-n; converges to the fixed point 2.",
  "domain": {"lo": 0.0, "hi": 4.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": null, "expr": "x/2+1"}]},
  "distance": {"builtin": "euclidean"},
  "hypothesis": {"corollary_2_5": {"phi": "t/2"}},
  "checks": ["p_bounded", "corollary_2_5", "uniqueness"],
  "n_max": 60,
  "solver": {"starts": [0.0, 1.0, 4.0], "tol": 1e-9, "max_iter": 100, "window": 3}
})json"},
    {"identity_negative", R"json({
  "name": "identity_negative",
  "notes": "Identity map: the one-step inequality fails for any psi with psi(t) < t, orbit distances never decay, and every sampled point is fixed; the distance sequence is still (trivially) nonincreasing.",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": null, "expr": "x"}]},
  "distance": {"builtin": "euclidean"},
  "hypothesis": {"boyd_wong": {"psi": "t/2"}},
  "checks": ["boyd_wong", "pair_decay", "bw_monotonicity", "uniqueness", "select_theorem"],
  "n_max": 16,
  "solver": {"starts": [0.0, 0.5, 1.0], "tol": 1e-9, "max_iter": 50, "window": 3}
})json"},
    {"square_map_negative", R"json({
  "name": "square_map_negative",
  "notes": "Squaring map: two sampled fixed points (0 and 1), so the uniqueness probe fails and orbits from different starts disagree.",
  "domain": {"lo": 0.0, "hi": 1.0, "sampler": {"kind": "grid", "count": 101}},
  "map": {"name": "T", "pieces": [{"from": 0.0, "to": null, "expr": "x*x"}]},
  "distance": {"builtin": "euclidean"},
  "hypothesis": {"boyd_wong": {"psi": "t/2"}},
  "checks": ["boyd_wong", "uniqueness"],
  "solver": {"starts": [0.0, 0.5, 1.0], "tol": 1e-9, "max_iter": 200, "window": 3}
})json"},
};

const std::size_t kCorpusSize = sizeof(kCorpus) / sizeof(kCorpus[0]);

} // namespace fplab
