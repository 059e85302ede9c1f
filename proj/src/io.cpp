#include "ztri/io.hpp"

#include <fstream>
#include <sstream>

namespace ztri {

namespace {

std::vector<double> number_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

DenseMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("data"))
        throw ParseError("matrix JSON needs \"n\" and \"data\"");
    const auto n = j.at("n").get<std::size_t>();
    const auto& data = j.at("data");
    if (!data.is_array() || data.size() != n)
        throw ParseError("matrix JSON: \"data\" must hold n rows");
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (const auto& r : data) {
        rows.push_back(number_list(r, "matrix row"));
        if (rows.back().size() != n) throw ParseError("matrix JSON: row length != n");
    }
    try {
        return DenseMatrix::from_rows(rows);
    } catch (const Error& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

DenseMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t\r", used) != std::string::npos)
                    throw ParseError("csv: trailing characters in cell '" + cell + "'");
            } catch (const std::logic_error&) {
                throw ParseError("csv: cannot parse cell '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("csv: no rows");
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw ParseError("csv: not square");
    try {
        return DenseMatrix::from_rows(rows);
    } catch (const Error& e) {
        throw ParseError(std::string("csv: ") + e.what());
    }
}

TridiagonalMatrix band_from_json(const nlohmann::json& j) {
    const auto n = j.at("n").get<std::size_t>();
    TridiagonalMatrix t(number_list(j.at("diag"), "diag"),
                        number_list(j.at("super"), "super"),
                        number_list(j.at("sub"), "sub"));
    if (t.n != n) throw ParseError("band JSON: \"n\" disagrees with diag length");
    return t;
}

ParsedInput parse_input_text(const std::string& text, const Tolerance& tol) {
    nlohmann::json j;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    } else {
        ParsedInput in;
        in.matrix = matrix_from_csv(text);
        in.source = "csv";
        return in;
    }

    if (!j.is_object()) throw ParseError("input JSON: expected an object");
    ParsedInput in;
    if (j.contains("kind")) {
        const std::string kind = j.at("kind").get<std::string>();
        try {
            if (kind == "type_d") {
                TypeDParams p;
                p.params = number_list(j.at("params"), "params");
                p.flipped = j.value("flipped", false);
                p.strict = j.value("strict", true);
                in.matrix = typed_build(p, tol);
                in.params = std::move(p);
            } else if (kind == "green") {
                GreenFactors f;
                f.a = number_list(j.at("a"), "a");
                f.b = number_list(j.at("b"), "b");
                if (j.contains("d")) f.d = number_list(j.at("d"), "d");
                f.validate();
                in.matrix = green_build(f);
                in.params = std::move(f);
            } else if (kind == "cyclops") {
                CyclopsParams p;
                p.m = j.at("m").get<std::size_t>();
                p.a = number_list(j.at("a"), "a");
                p.b1 = j.value("b1", 0.0);
                p.b2 = j.value("b2", 0.0);
                in.matrix = cyclops_build(p, tol);
                in.params = std::move(p);
            } else {
                throw ParseError("unknown parameter kind '" + kind + "'");
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string(kind) + " params: " + e.what());
        }
        in.source = kind;
        return in;
    }
    if (j.contains("diag")) {
        try {
            in.matrix = to_dense(band_from_json(j));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("band JSON: ") + e.what());
        }
        in.source = "band";
        return in;
    }
    in.matrix = matrix_from_json(j);
    in.source = "matrix";
    return in;
}

ParsedInput load_input(const std::string& path, const Tolerance& tol) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_input_text(buf.str(), tol);
}

nlohmann::json matrix_to_json(const DenseMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", m.order()}, {"data", std::move(rows)}};
}

nlohmann::json band_to_json(const TridiagonalMatrix& t) {
    return {{"n", t.n}, {"diag", t.diag}, {"super", t.superdiag}, {"sub", t.subdiag}};
}

nlohmann::json typed_to_json(const TypeDParams& p) {
    return {{"kind", "type_d"}, {"params", p.params}, {"flipped", p.flipped},
            {"strict", p.strict}};
}

nlohmann::json green_to_json(const GreenFactors& g) {
    nlohmann::json j{{"kind", "green"}, {"a", g.a}, {"b", g.b}};
    if (!g.d.empty()) j["d"] = g.d;
    return j;
}

nlohmann::json cyclops_to_json(const CyclopsParams& p) {
    return {{"kind", "cyclops"}, {"m", p.m}, {"a", p.a}, {"b1", p.b1}, {"b2", p.b2}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace ztri
