#include "grasslines/pencil_io.hpp"

#include <fstream>

#include <json.hpp>

namespace grasslines {

namespace {

using nlohmann::ordered_json;

Mat mat_from_json(const ordered_json& rows, const std::string& name) {
    if (!rows.is_array() || rows.empty())
        throw error("pencil file: '" + name + "' must be a nonempty array of rows");
    size_t n = rows.size();
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw error("pencil file: '" + name + "' row " + std::to_string(i) +
                        " must have " + std::to_string(n) + " entries");
        for (size_t j = 0; j < n; ++j) {
            const auto& cell = row[j];
            if (cell.is_number_integer())
                m.at(i, j) = rat(cell.get<long>());
            else if (cell.is_string())
                m.at(i, j) = rat_parse(cell.get<std::string>());
            else
                throw error("pencil file: entries must be integers or rational strings");
        }
    }
    return m;
}

} // namespace

AntisymPencil pencil_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("pencil file: JSON parse error: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("parity") || !j.contains("A") || !j.contains("B"))
        throw error("pencil file: need fields n, parity, A, B");
    int n = j["n"].get<int>();
    std::string parity = j["parity"].get<std::string>();
    if (parity != "even" && parity != "odd")
        throw error("pencil file: parity must be \"even\" or \"odd\"");
    size_t expect = parity == "even" ? 2 * static_cast<size_t>(n)
                                     : 2 * static_cast<size_t>(n) + 1;
    Mat a = mat_from_json(j["A"], "A");
    Mat b = mat_from_json(j["B"], "B");
    if (a.rows() != expect)
        throw error("pencil file: size " + std::to_string(a.rows()) +
                    " does not match n/parity");
    AntisymPencil p = make_pencil(a, b);
    return p;
}

AntisymPencil pencil_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open pencil file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return pencil_from_json_text(text);
}

std::string pencil_to_json_text(const AntisymPencil& p) {
    ordered_json j;
    j["n"] = p.n;
    j["parity"] = p.parity == Parity::even_section ? "even" : "odd";
    auto mat_json = [](const Mat& m) {
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (size_t jx = 0; jx < m.cols(); ++jx) row.push_back(rat_str(m.at(i, jx)));
            rows.push_back(row);
        }
        return rows;
    };
    j["A"] = mat_json(p.A);
    j["B"] = mat_json(p.B);
    return j.dump(2) + "\n";
}

} // namespace grasslines
