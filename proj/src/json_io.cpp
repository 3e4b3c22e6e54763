#include "lrc/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace lrc {

using nlohmann::json;

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    return Field(j.at("p").get<std::uint64_t>(), j.at("e").get<unsigned>(),
                 j.at("modulus").get<std::vector<std::uint64_t>>());
}

json elem_to_json(const Field& f, const Elem& x) {
    f.validate(x);
    return json(x);
}

Elem elem_from_json(const Field& f, const json& j) {
    Elem x = j.get<Elem>();
    f.validate(x);
    return x;
}

json matrix_to_json(const Matrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(elem_to_json(m.field(), m.at(i, j)));
        data.push_back(std::move(row));
    }
    return json{{"field", field_to_json(m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& data = j.at("data");
    if (data.size() != rows)
        throw std::invalid_argument("matrix JSON: row count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (data[i].size() != cols)
            throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = elem_from_json(f, data[i][c]);
    }
    return m;
}

json code_to_json(const LinearCode& c) {
    json j{{"field", field_to_json(c.field)},
           {"n", c.n},
           {"k", c.k},
           {"G", matrix_to_json(c.G)}};
    if (c.H) j["H"] = matrix_to_json(*c.H);
    return j;
}

LinearCode code_from_json(const json& j) {
    Matrix g = matrix_from_json(j.at("G"));
    std::optional<Matrix> h;
    if (j.contains("H")) h = matrix_from_json(j.at("H"));
    LinearCode c = make_code(g, h);
    if (j.at("n").get<std::size_t>() != c.n ||
        j.at("k").get<std::size_t>() != c.k)
        throw std::invalid_argument("code JSON: declared n/k do not match G");
    if (field_from_json(j.at("field")) != c.field)
        throw std::invalid_argument("code JSON: field does not match G");
    return c;
}

json family_to_json(const RepairFamily& fam) {
    json blocks = json::array();
    for (const auto& b : fam.blocks) {
        json blk = json::array();
        for (auto x : b) blk.push_back(x + 1);  // 1-based on the wire
        blocks.push_back(std::move(blk));
    }
    return json{{"n", fam.n}, {"blocks", std::move(blocks)}};
}

RepairFamily family_from_json(const json& j) {
    RepairFamily fam;
    fam.n = j.at("n").get<std::size_t>();
    for (const auto& blk : j.at("blocks")) {
        std::vector<std::size_t> b;
        for (const auto& x : blk) {
            const auto v = x.get<std::int64_t>();
            if (v < 1 || std::size_t(v) > fam.n)
                throw std::invalid_argument(
                    "family JSON: coordinate out of range (1-based)");
            b.push_back(std::size_t(v) - 1);
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        fam.blocks.push_back(std::move(b));
    }
    return fam;
}

json plan_to_json(const ConstructionPlan& p) {
    return json{{"variant", std::string(1, p.variant)},
                {"r", p.params.r},
                {"delta", p.params.delta},
                {"m", p.params.m},
                {"u", p.params.u},
                {"v", p.params.v},
                {"w", p.params.w},
                {"q", p.q},
                {"e", p.e}};
}

ConstructionPlan plan_from_json(const json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    if (variant.size() != 1)
        throw std::invalid_argument("plan JSON: variant must be A or B");
    return make_plan(variant[0], j.at("r").get<std::size_t>(),
                     j.at("delta").get<std::size_t>(),
                     j.at("m").get<std::size_t>(),
                     j.at("u").get<std::size_t>(),
                     j.at("v").get<std::size_t>(),
                     j.at("w").get<std::size_t>(),
                     j.at("q").get<std::uint64_t>(),
                     j.at("e").get<unsigned>());
}

void write_code_file(const std::string& path, const LinearCode& c,
                     const std::optional<ConstructionPlan>& plan) {
    json j = code_to_json(c);
    if (plan) j["plan"] = plan_to_json(*plan);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

std::pair<LinearCode, std::optional<ConstructionPlan>> read_code_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file for reading: " + path);
    json j;
    in >> j;
    std::optional<ConstructionPlan> plan;
    if (j.contains("plan")) plan = plan_from_json(j.at("plan"));
    return {code_from_json(j), plan};
}

}  // namespace lrc
