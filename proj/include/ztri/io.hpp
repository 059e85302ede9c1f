#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "ztri/cyclops.hpp"
#include "ztri/errors.hpp"
#include "ztri/green.hpp"
#include "ztri/matrix.hpp"
#include "ztri/type_d.hpp"

namespace ztri {

// What a CLI input file can hold: a dense matrix, or parameters for one of the
// structured families. Parameter inputs keep the densified matrix alongside.
struct ParsedInput {
    std::variant<std::monostate, TypeDParams, GreenFactors, CyclopsParams> params;
    DenseMatrix matrix = DenseMatrix(1);
    std::string source;  // "matrix", "band", "csv", "type_d", "green", "cyclops"
};

ParsedInput load_input(const std::string& path, const Tolerance& tol = {});
ParsedInput parse_input_text(const std::string& text, const Tolerance& tol = {});

DenseMatrix matrix_from_json(const nlohmann::json& j);
DenseMatrix matrix_from_csv(const std::string& text);
TridiagonalMatrix band_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const DenseMatrix& m);
nlohmann::json band_to_json(const TridiagonalMatrix& t);
nlohmann::json typed_to_json(const TypeDParams& p);
nlohmann::json green_to_json(const GreenFactors& g);
nlohmann::json cyclops_to_json(const CyclopsParams& p);

std::string dump_json(const nlohmann::json& j);

}  // namespace ztri
