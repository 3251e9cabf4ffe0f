#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "niltrace/tuple.hpp"

namespace niltrace {

// Tuple document format:
//   { "size": 2|3, "matrices": [ [[0,1,0],[0,0,1],[0,0,0]], ... ] }
// Entries are JSON integers or exact fractions as "p/q" strings; no float
// path exists. Serialization emits integers bare (as strings beyond the
// 53-bit range so nothing is ever rounded) and fractions as "p/q".

inline NilTuple tuple_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("matrices"))
        throw std::invalid_argument("document needs \"size\" and \"matrices\"");
    const int n = j.at("size").get<int>();
    if (n != 2 && n != 3) throw std::invalid_argument("size must be 2 or 3");
    const auto& ms = j.at("matrices");
    if (!ms.is_array() || ms.empty()) throw std::invalid_argument("matrices must be a non-empty array");

    std::vector<Mat> mats;
    for (size_t k = 0; k < ms.size(); ++k) {
        const auto& rows = ms[k];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw std::invalid_argument("matrix " + std::to_string(k + 1) + ": expected " +
                                        std::to_string(n) + " rows");
        Mat m(n);
        for (int i = 0; i < n; ++i) {
            const auto& row = rows[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw std::invalid_argument("matrix " + std::to_string(k + 1) + ": row " +
                                            std::to_string(i + 1) + " must have " +
                                            std::to_string(n) + " entries");
            for (int jj = 0; jj < n; ++jj) {
                const auto& e = row[jj];
                if (e.is_number_integer())
                    m.at(i, jj) = rat(e.get<long long>());
                else if (e.is_string())
                    m.at(i, jj) = parse_rat(e.get<std::string>());
                else
                    throw std::invalid_argument("matrix " + std::to_string(k + 1) +
                                                ": entries must be integers or \"p/q\" strings");
            }
        }
        if (!is_nilpotent(m))
            throw std::invalid_argument("matrix " + std::to_string(k + 1) + ": " +
                                        NilTuple::describe_failure(m));
        mats.push_back(std::move(m));
    }
    return NilTuple{std::move(mats)};
}

inline nlohmann::json tuple_to_json(const NilTuple& t) {
    nlohmann::json j;
    j["size"] = t.dim();
    auto entry = [](const Rat& r) -> nlohmann::json {
        if (is_integer(r) && r.get_num().fits_slong_p() &&
            mpz_sizeinbase(r.get_num().get_mpz_t(), 2) <= 52)
            return static_cast<long long>(r.get_num().get_si());
        return to_string(r);
    };
    nlohmann::json ms = nlohmann::json::array();
    for (const Mat& m : t.mats) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < m.size(); ++jj) row.push_back(entry(m.at(i, jj)));
            rows.push_back(std::move(row));
        }
        ms.push_back(std::move(rows));
    }
    j["matrices"] = std::move(ms);
    return j;
}

inline NilTuple load_tuple(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    try {
        return tuple_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

inline void save_tuple(const std::string& path, const NilTuple& t) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << tuple_to_json(t).dump(1) << "\n";
}

}  // namespace niltrace
