#pragma once

#include <vector>

#include "zonorec/engine.hpp"

namespace zonorec {

using TropicalLabeling = Labeling<TropicalDomain>;

// The hyperplane i_s = c, with s 0-based and 1 <= c <= a_s - 1.
struct Wall {
    int s = 0;
    int c = 1;
};

using Cutcurve = std::vector<Point>;

void check_wall(const ZonogonSpec& spec, const Wall& w);

Report validate_cutcurve(const ZonogonSpec& spec, const Wall& w, const Cutcurve& g);
Cutcurve elementary_move(const ZonogonSpec& spec, const Wall& w, const Cutcurve& g, std::size_t t0);
std::vector<Cutcurve> all_cutcurves(const ZonogonSpec& spec, const Wall& w);

// Edges (I, I+e_i), i != s, with both ends on the wall.
std::vector<Edge> wall_edges(const ZonogonSpec& spec, const Wall& w);
std::vector<Edge> cutcurve_edges(const Cutcurve& g);

bool w_inequalities_hold(const TropicalLabeling& lab, const Wall& w, const Edge& e);

struct PropagationReport {
    bool recurrence_ok = true;
    bool hypothesis_met = false;
    bool conclusion_ok = false;
    std::size_t edges_checked = 0;
    std::vector<Edge> violations;
    std::string message;
};

PropagationReport check_propagation(const TropicalLabeling& lab, const Wall& w, const Cutcurve& g);

struct PropagationTrials {
    std::size_t samples = 0;         // labelings drawn
    std::size_t hypothesis_met = 0;  // of which some cutcurve met the hypothesis
    std::size_t edges_checked = 0;
    std::size_t violations = 0;
    bool used_affine = false;        // switched to affine-plus-noise data
    std::string first_failure;
    std::string witness;             // hypothesis failure of the last rejected sample
};

// Draws tropical data on t_min and extends it until `wanted` labelings meet the hypothesis
// or `max_samples` are spent. Only `only` is tried as cutcurve when it is non-empty.
PropagationTrials run_propagation_trials(const ZonogonSpec& spec, const Wall& w, std::size_t wanted,
                                         std::uint64_t seed, std::size_t max_samples = 20000,
                                         const Cutcurve& only = {});

struct MabcValues {
    mpq_class a, b, c, d, p, q, r, s, v, w, y, z;
};

bool mabc_holds(const MabcValues& x);
// Whether (A)-(D) imply (E)-(H) on this instance.
bool local_step_check(const MabcValues& x);

}  // namespace zonorec
