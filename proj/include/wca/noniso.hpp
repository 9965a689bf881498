#pragma once

#include <optional>

#include "wca/graph.hpp"
#include "wca/wca.hpp"

namespace wca {

/// True iff relabelling g by p (vertex u of g becomes vertex p.perm[u-1] of
/// h) reproduces h's arc set exactly.
bool verify_isomorphism(const PermutationMatrix& p, const DirectedGraph& g,
                        const DirectedGraph& h);

struct NonIsoReport {
    enum class Outcome { NonIsomorphic, Isomorphic, Undecided };
    Outcome outcome = Outcome::Undecided;
    std::optional<PermutationMatrix> witness; // verified mapping when Isomorphic
    long e_size = 0;
    long probes = 0;
    long deductions = 0;
    double wall_time_s = 0.0;
};

const char* to_string(NonIsoReport::Outcome o);

/// Runs the closure solver on the permutation system of "g is isomorphic to
/// h": exclusions from both reading directions of the congruence (g arcs
/// must land on h arcs, h arcs must be hit by g arcs). Infeasibility proves
/// non-isomorphism; any extracted mapping is verified before being reported.
NonIsoReport noniso_decide(const DirectedGraph& g, const DirectedGraph& h,
                           const SolverConfig& cfg = {});

} // namespace wca
