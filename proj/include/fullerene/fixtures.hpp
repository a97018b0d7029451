#pragma once

#include "fullerene/fullerene_graph.hpp"

namespace fullerene {

// Embedded rotation-system fixtures: the unique fullerenes on 20, 24 and 26
// vertices. Constructed once by plane completion search and frozen; each is
// gate-checked by validate_fullerene and its face counts in the test suite.
const FullereneGraph& f20();
const FullereneGraph& f24();
const FullereneGraph& f26();

// Two disjoint pentagons joined by a single edge; the smallest graph of the
// unique-Kekule-structure shape that survives pendant reduction.
const Graph& unique_matching_gadget();

// Reference anti-forcing sets, found by lexicographic witness search and
// frozen. The first two leave an empty pendant-reduction residual; the
// gadget-case set on f24 leaves the ten-vertex gadget residual.
EdgeSet f20_reference_antiforcing();        // size 4
EdgeSet f24_reference_antiforcing();        // size 4
EdgeSet f24_gadget_residual_antiforcing();  // size 4, residual nonempty
EdgeSet f26_reference_antiforcing();        // size 5

}  // namespace fullerene
