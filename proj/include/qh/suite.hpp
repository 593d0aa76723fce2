/*
 * suite.hpp
 * ---------
 * The full verification run for the Gr(2) contraction: twelve criteria,
 * each checked exactly, each reported with diagnostic lines.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qh::suite {

struct Options {
    int degree_bound = 4;
    int samples = 1000;
    std::uint64_t seed = 20260101;
};

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;  // witnesses for failures, facts otherwise
};

/// Reads QHCONTRACT_DEGREE_BOUND (default 4); throws std::invalid_argument
/// on a malformed or out-of-range value.
int degree_bound_from_env();

Criterion plane_contraction();
Criterion dual_plane_contraction();
Criterion relation_contraction();
Criterion covariance_derivation();
Criterion q_rtt();
Criterion r_matrix_contraction();
Criterion h_rtt();
Criterion qybe_verdicts();
Criterion limit_of_rq();
Criterion inverses();
Criterion product_theorem();
Criterion property_suite(const Options& opt);

std::vector<Criterion> run_all(const Options& opt);

}  // namespace qh::suite
