#pragma once

#include <string>

#include "qcenter/blocks.hpp"
#include "qcenter/cohomology.hpp"

namespace qcenter {

// Diamond table <-> versioned JSON ("qcenter.diamond/1").  Levi indices are
// 1-based on the wire, 0-based in memory.
std::string diamond_to_json(const HodgeDiamond& hd);
HodgeDiamond diamond_from_json(const std::string& text);

// Table rendering mirroring the row/column convention rows i+j, columns j-i.
std::string diamond_to_markdown(const HodgeDiamond& hd, bool per_weight);
std::string diamond_to_csv(const HodgeDiamond& hd);

std::string census_to_json(const BlockCensus& census);
std::string census_to_markdown(const BlockCensus& census);
std::string census_to_csv(const BlockCensus& census);

// Debug dumps ("qcenter.module/1", "qcenter.bgg/1").
std::string module_to_json(const WeightedBModule& e);
std::string bgg_to_json(const WeightedBModule& e, const WeightVector& nu);

// "3·L0 + 1·L[1,0]" style rendering of an isotype decomposition.
std::string isotypes_to_string(const std::map<WeightVector, int64_t>& iso);

}  // namespace qcenter
