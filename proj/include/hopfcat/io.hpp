#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcat/group.hpp"
#include "hopfcat/hopf.hpp"
#include "hopfcat/smash.hpp"

namespace hopfcat {

using Json = nlohmann::json;

namespace io {

/// FNV-1a 64-bit digest, hex encoded. Used to fingerprint input files in
/// reports; not a cryptographic hash.
inline std::string fnv1a_digest(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& origin) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("invalid JSON in " + origin);
    return j;
}

inline Json load_json_file(const std::filesystem::path& path) {
    return parse_json(read_file(path), path.string());
}

namespace detail {

inline const Json& field(const Json& j, const char* name, const std::string& origin) {
    const auto it = j.find(name);
    if (it == j.end()) throw SchemaError(origin + ": missing field '" + name + "'");
    return *it;
}

inline Rational scalar(const Json& j, const std::string& origin) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw SchemaError(origin + ": scalar must be a \"p/q\" string");
}

inline size_t index_in(const Json& j, size_t bound, const std::string& origin) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw SchemaError(origin + ": index must be a non-negative integer");
    const size_t v = j.get<size_t>();
    if (v >= bound) throw SchemaError(origin + ": index out of range");
    return v;
}

inline Matrix matrix(const Json& j, const std::string& origin) {
    if (!j.is_array() || j.empty()) throw SchemaError(origin + ": expected a non-empty 2d array");
    const size_t rows = j.size();
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw SchemaError(origin + ": ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m(i, c) = scalar(j[i][c], origin);
    }
    return m;
}

inline Vec vector(const Json& j, const std::string& origin) {
    if (!j.is_array()) throw SchemaError(origin + ": expected an array of scalars");
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[i] = scalar(j[i], origin);
    return v;
}

}  // namespace detail

/// {"order": n, "identity": i, "table": [[...]]} with 0-based indices.
inline GroupTable group_table_from_json(const Json& j, const std::string& origin,
                                        const std::string& default_name = "") {
    const size_t order = detail::field(j, "order", origin).get<size_t>();
    if (order == 0) throw SchemaError(origin + ": field 'order' must be positive");
    const Json& tbl = detail::field(j, "table", origin);
    if (!tbl.is_array() || tbl.size() != order) throw SchemaError(origin + ": field 'table' has wrong size");
    std::vector<std::vector<size_t>> rows(order, std::vector<size_t>(order));
    for (size_t i = 0; i < order; ++i) {
        if (!tbl[i].is_array() || tbl[i].size() != order)
            throw SchemaError(origin + ": field 'table' has ragged rows");
        for (size_t k = 0; k < order; ++k) rows[i][k] = detail::index_in(tbl[i][k], order, origin + ".table");
    }
    const size_t identity = detail::index_in(detail::field(j, "identity", origin), order, origin + ".identity");
    std::string name = j.value("name", default_name);
    return GroupTable(order, std::move(rows), identity, std::move(name));
}

inline Json group_table_to_json(const GroupTable& g) {
    Json j;
    j["name"] = g.name();
    j["order"] = g.order();
    j["identity"] = g.identity();
    j["table"] = g.table();
    return j;
}

inline Json hopf_to_json(const HopfAlgebra& h) {
    const size_t n = h.dim();
    Json j;
    j["dim"] = n;
    j["basis"] = h.basis_names();
    Json mul = Json::array(), comul = Json::array();
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k)
            for (const auto& [l, c] : h.mul_terms(i, k)) mul.push_back({i, k, l, to_string(c)});
        for (const auto& t : h.comul_terms(i)) comul.push_back({i, t.left, t.right, to_string(t.coeff)});
    }
    j["mul"] = std::move(mul);
    j["comul"] = std::move(comul);
    Json unit = Json::array(), counit = Json::array();
    for (size_t i = 0; i < n; ++i) {
        unit.push_back(to_string(h.unit()[i]));
        counit.push_back(to_string(h.counit_row()[i]));
    }
    j["unit"] = std::move(unit);
    j["counit"] = std::move(counit);
    Json antipode = Json::array();
    for (size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (size_t c = 0; c < n; ++c) row.push_back(to_string(h.antipode()(i, c)));
        antipode.push_back(std::move(row));
    }
    j["antipode"] = std::move(antipode);
    return j;
}

/// {"dim", "basis", "mul": sparse [i,j,k,"p/q"] triples, "comul", "unit",
/// "counit", "antipode"}.
inline HopfPtr hopf_from_json(const Json& j, const std::string& origin) {
    const size_t n = detail::field(j, "dim", origin).get<size_t>();
    if (n == 0) throw SchemaError(origin + ": field 'dim' must be positive");
    std::vector<std::string> names;
    const Json& basis = detail::field(j, "basis", origin);
    if (!basis.is_array() || basis.size() != n)
        throw SchemaError(origin + ": field 'basis' must list dim names");
    for (const auto& b : basis) names.push_back(b.get<std::string>());
    auto load_tensor = [&](const char* key) {
        std::vector<Rational> t(n * n * n);
        const Json& entries = detail::field(j, key, origin);
        if (!entries.is_array()) throw SchemaError(origin + ": field '" + key + "' must be an array");
        for (const auto& e : entries) {
            if (!e.is_array() || e.size() != 4)
                throw SchemaError(origin + ": field '" + key + "' entries must be [i,j,k,scalar]");
            const size_t i = detail::index_in(e[0], n, origin);
            const size_t a = detail::index_in(e[1], n, origin);
            const size_t b = detail::index_in(e[2], n, origin);
            t[(i * n + a) * n + b] = detail::scalar(e[3], origin);
        }
        return t;
    };
    Vec unit = detail::vector(detail::field(j, "unit", origin), origin + ".unit");
    Vec counit = detail::vector(detail::field(j, "counit", origin), origin + ".counit");
    Matrix antipode = detail::matrix(detail::field(j, "antipode", origin), origin + ".antipode");
    if (unit.size() != n) throw SchemaError(origin + ": field 'unit' has wrong length");
    if (counit.size() != n) throw SchemaError(origin + ": field 'counit' has wrong length");
    if (antipode.rows() != n || antipode.cols() != n)
        throw SchemaError(origin + ": field 'antipode' has wrong shape");
    return std::make_shared<HopfAlgebra>(n, std::move(names), load_tensor("mul"),
                                         load_tensor("comul"), std::move(unit), std::move(counit),
                                         std::move(antipode));
}

/// Loads a Hopf algebra from a file holding either Hopf structure constants
/// or a group table (in which case the group algebra is built).
inline HopfPtr load_hopf(const std::filesystem::path& path) {
    const Json j = load_json_file(path);
    if (j.contains("mul")) return hopf_from_json(j, path.string());
    if (j.contains("table"))
        return group_algebra(group_table_from_json(j, path.string(), path.stem().string()));
    throw SchemaError(path.string() + ": expected field 'mul' (Hopf algebra) or 'table' (group)");
}

/// {"dom": path, "cod": path, "matrix": [[...]]}; dom/cod paths resolve
/// relative to the morphism file's directory.
inline Morphism load_morphism(const std::filesystem::path& path) {
    const Json j = load_json_file(path);
    const std::string origin = path.string();
    const auto base = path.parent_path();
    const std::string dom_path = detail::field(j, "dom", origin).get<std::string>();
    const std::string cod_path = detail::field(j, "cod", origin).get<std::string>();
    HopfPtr dom = load_hopf(base / dom_path);
    HopfPtr cod = load_hopf(base / cod_path);
    Matrix m = detail::matrix(detail::field(j, "matrix", origin), origin + ".matrix");
    return Morphism(std::move(dom), std::move(cod), std::move(m));
}

/// {"actor": path, "target": path, "matrix": [[...]]} with the action matrix
/// indexed as in Action.
inline Action load_action(const std::filesystem::path& path) {
    const Json j = load_json_file(path);
    const std::string origin = path.string();
    const auto base = path.parent_path();
    HopfPtr actor = load_hopf(base / detail::field(j, "actor", origin).get<std::string>());
    HopfPtr target = load_hopf(base / detail::field(j, "target", origin).get<std::string>());
    Matrix m = detail::matrix(detail::field(j, "matrix", origin), origin + ".matrix");
    return Action(std::move(actor), std::move(target), std::move(m));
}

/// A subspace file is a bare JSON list of coordinate vectors; it is
/// canonicalized on load.
inline Subspace load_subspace(const std::filesystem::path& path, size_t ambient_dim) {
    const Json j = load_json_file(path);
    if (!j.is_array()) throw SchemaError(path.string() + ": expected a list of coordinate vectors");
    std::vector<Vec> rows;
    for (const auto& r : j) {
        Vec v = detail::vector(r, path.string());
        if (v.size() != ambient_dim)
            throw SchemaError(path.string() + ": vector length does not match the ambient dimension");
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(ambient_dim, rows);
}

inline Json subspace_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (size_t i = 0; i < s.dim(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < s.ambient_dim(); ++j) row.push_back(to_string(s.basis()(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace io

/// A machine-readable command report. Serialized reports contain no
/// timestamps or timings, so identical inputs produce identical bytes;
/// elapsed time is carried separately for logging.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, digest)
    Json result;
    std::string status;  // "pass" | "fail" | "error"
    long long elapsed_ms = 0;

    Json to_json() const {
        Json j;
        j["command"] = command;
        Json in = Json::array();
        for (const auto& [path, digest] : inputs) in.push_back({{"path", path}, {"digest", digest}});
        j["inputs"] = std::move(in);
        j["result"] = result;
        j["status"] = status;
        return j;
    }

    std::string serialize(bool pretty) const { return pretty ? to_json().dump(2) + "\n" : to_json().dump() + "\n"; }
};

}  // namespace hopfcat
