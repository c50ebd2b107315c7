#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcenter/numeric.hpp"

namespace qcenter {

struct RunConfig {
    std::string command;  // diamond | census | center-dim | bwb | bgg-dump
    char type_letter = 'A';
    int rank = 1;
    std::vector<int> levi;  // 0-based simple indices
    int64_t l = 0;
    std::string format = "md";  // md | json | csv
    std::string cache_dir;      // empty disables the cache
    int jobs = 1;
    bool per_weight = false;

    // bwb
    int bwb_n = 4;
    int bwb_k = 2;
    std::vector<int64_t> alpha;
    std::vector<int64_t> beta;

    // bgg-dump
    int j_degree = 0;
    int r_degree = 0;
    std::vector<int64_t> nu;
    bool dump_differentials = false;
};

// Exit codes: 0 success, 1 usage, 2 internal-consistency failure, 3 cache I/O.
int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

// "1,3" -> {0,2}; empty string -> {}
std::vector<int> parse_levi(const std::string& text);

}  // namespace qcenter
