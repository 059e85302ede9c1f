#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ztri/cyclops.hpp"
#include "ztri/matrix.hpp"

namespace ztri {

struct GumCheck {
    bool ok = false;
    int failed_condition = 0;               // 1 = nonnegativity, 2 = diagonal dominance,
                                            // 3 = triple labeling
    std::array<std::size_t, 3> triple{};    // 1-based, set when failed_condition == 3
};

/// Generalized ultrametric predicate: entrywise nonnegativity, dominant
/// diagonal, and the triple-labeling condition on every 3-subset (all six
/// labelings tried). On failure reports the first violating triple in
/// lexicographic order.
GumCheck is_generalized_ultrametric(const DenseMatrix& c, const Tolerance& tol = {});

struct GCyclopsResult {
    bool ok = false;
    std::optional<CyclopsParams> params;
};

/// Nonsingular cyclops with some eye 1 <= m <= n-1 and
/// min{a_m, a_{m+1}} >= max{b1, b2}, min{b1, b2} > 0.
GCyclopsResult is_g_cyclops(const DenseMatrix& c, const Tolerance& tol = {});

struct EquivalenceReport {
    bool inverse_structure = false;      // tridiagonal irreducible diagonally dominant
                                         // M-matrix with confined row/col sums
    bool g_cyclops = false;
    bool gum_tridiagonal_inverse = false;
    bool gum_totally_nonnegative = false;
    bool all_equal = false;
};

/// Independent evaluation of the four equivalent characterizations of an
/// irreducible inverse of a diagonally dominant tridiagonal M-matrix.
EquivalenceReport gum_tridiagonal_inverse_equivalences(const DenseMatrix& c,
                                                       const Tolerance& tol = {});

enum class BlockRole { g_cyclops, scalar, flat_2x2 };

struct BlockFormCertificate {
    bool transposed = false;  // form found on C^T rather than C
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end), 0-based
    std::vector<BlockRole> roles;
    std::vector<std::vector<double>> flat;  // flat[s][t], s <= t: f_st (diagonal f_ss)
    std::vector<double> g_values;           // subdiagonal entry of flat_2x2 blocks
    std::size_t q = 0;                      // 1-based pivot block index
};

struct GumCertificate {
    enum class Kind { g_cyclops, block_form, direct_sum, not_gum };
    Kind kind = Kind::not_gum;
    std::optional<CyclopsParams> cyclops;
    std::optional<BlockFormCertificate> block_form;
    std::vector<GumCertificate> components;  // direct_sum
    std::vector<std::size_t> indices;        // 0-based index set of this component
    std::string detail;                      // first violated clause on failure
};

/// Block upper-triangular form of a reducible (but not completely reducible)
/// totally nonnegative generalized ultrametric matrix, attempted on C and
/// then on C^T. Returns a block_form certificate or not_gum with the first
/// violated clause.
GumCertificate recognize_block_form(const DenseMatrix& c, const Tolerance& tol = {});

/// Direct-sum decomposition over the connected components of the undirected
/// nonzero-pattern graph; each component must classify as a G-cyclops or a
/// block form.
GumCertificate gum_decompose(const DenseMatrix& c, const Tolerance& tol = {});

}  // namespace ztri
