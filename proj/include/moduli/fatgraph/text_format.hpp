#pragma once

#include "moduli/fatgraph/fatgraph.hpp"

#include <string>
#include <string_view>

namespace moduli {

/// `tau0=(1 3 5)(2 6 4); tau1=(1 2)(3 4)(5 6); labels=[1,2,3]`
///
/// Darts are printed 1-based. Each cycle starts at its smallest dart and
/// cycles appear in order of that dart; labels follow boundary-cycle order.
std::string write_fatgraph(const FatGraph& graph);

/// Inverse of write_fatgraph. Accepts cycles in any order and rotation;
/// rejects anything else with RefusalError. Does not validate the graph.
FatGraph read_fatgraph(std::string_view line);

}  // namespace moduli
