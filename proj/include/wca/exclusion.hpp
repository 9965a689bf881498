#pragma once

#include <iosfwd>
#include <utility>

#include "wca/closure.hpp"
#include "wca/graph.hpp"
#include "wca/lattice.hpp"
#include "wca/model.hpp"

namespace wca {

/// Builds the instance's exclusion set from missing arcs and missing short
/// paths. For every ordered vertex pair the arc is removed for the duration
/// of a shortest-path query; a minimal length m rules out all shorter
/// connections, and each ruled-out length k pins the pair's positions k
/// apart. Pairs involving the start/end vertex rule out whole position rows
/// instead (the first k and last k slots of the cycle).
///
/// The emitted set is a pure function of the arc set: deterministic and
/// independent of enumeration order.
ExclusionSet build_exclusion_set(const DirectedGraph& g);

/// Zeroes every member's cell and runs propagation to its fixpoint.
PropagationOutcome apply_exclusion(const ExclusionSet& e, ClosureEngine& engine);

/// (p_free, q_free): cells not in state Zero; q counted over canonical cells.
std::pair<long, long> count_free(const VarLattice& lattice);

/// Exclusions for the permutation system of "G maps onto H": one inducer per
/// product term of the n^2 congruence equations whose right side is zero,
/// i.e. every {(u,i),(v,j)} with an arc (u,v) in g but no arc (i,j) in h.
/// Both graphs must have the same vertex count (here the lattice dimension n,
/// not n+1: the mapping constrains all vertices).
ExclusionSet build_noniso_exclusion(const DirectedGraph& g, const DirectedGraph& h);

/// Line-oriented "u i v j" text, canonical and sorted; round-trips exactly.
void write_exclusion_set(std::ostream& out, const ExclusionSet& e);
ExclusionSet read_exclusion_set(std::istream& in, int n);

} // namespace wca
