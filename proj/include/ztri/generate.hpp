#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ztri/matrix.hpp"

namespace ztri {

// Families the generator can produce. Every instance carries the defining
// inequalities of its family with margin >= 0.1, so membership is certifiable
// rather than probable.
enum class GenClass {
    type_d,    // strict type D, nonsingular
    green_z,   // green factors with all h_i >= margin (inverse tridiagonal Z)
    green_m,   // same-sign factors, increasing positive ratios (inverse M)
    cyclops_z, // cyclops whose closed-form inverse is a Z-matrix
    g_cyclops, // min{a_m,a_{m+1}} >= max{b1,b2}+margin, min{b1,b2} >= margin
    gum_block, // reducible block upper triangular ultrametric form, n >= 4
    gum_sum,   // direct sum of >= 2 ultrametric components, n >= 3
};

GenClass gen_class_from_name(const std::string& name);  // ParseError on unknown

struct Generated {
    nlohmann::json params;  // family parameters (shape depends on the class)
    DenseMatrix matrix = DenseMatrix(1);
};

/// Deterministic per (cls, n, seed). Throws InfeasibleSize when the class
/// cannot be realized at order n.
Generated generate_instance(GenClass cls, std::size_t n, std::uint64_t seed);

}  // namespace ztri
