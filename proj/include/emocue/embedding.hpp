#pragma once

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emocue/errors.hpp"
#include "emocue/textutil.hpp"

namespace emocue {

// Plain-text word vectors: optional "<count> <dim>" header line, then one
// "<token> <f1> ... <fdim>" per line. Tokens are stored lowercased.
struct EmbeddingTable {
    std::size_t dim = 0;
    std::unordered_map<std::string, std::vector<double>> entries;

    const std::vector<double>* find(std::string_view token) const {
        std::string key;
        key.reserve(token.size());
        for (char c : token) key.push_back(detail::ascii_lower(c));
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    }

    static EmbeddingTable parse(std::string_view text) {
        EmbeddingTable table;
        std::size_t declared_count = 0;
        bool have_header = false;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = text.find('\n', pos);
            const std::string_view line =
                text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
            pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
            ++line_no;

            std::istringstream ss{std::string(line)};
            std::vector<std::string> fields;
            std::string f;
            while (ss >> f) fields.push_back(f);
            if (fields.empty()) continue;

            if (line_no == 1 && fields.size() == 2) {
                char* end0 = nullptr;
                char* end1 = nullptr;
                const unsigned long c = std::strtoul(fields[0].c_str(), &end0, 10);
                const unsigned long d = std::strtoul(fields[1].c_str(), &end1, 10);
                if (*end0 == '\0' && *end1 == '\0') {
                    declared_count = c;
                    table.dim = d;
                    have_header = true;
                    continue;
                }
            }
            if (fields.size() < 2)
                throw ConfigError("embedding line " + std::to_string(line_no) + ": no values");
            std::vector<double> vec;
            vec.reserve(fields.size() - 1);
            for (std::size_t i = 1; i < fields.size(); ++i) {
                char* end = nullptr;
                const double v = std::strtod(fields[i].c_str(), &end);
                if (end == fields[i].c_str() || *end != '\0')
                    throw ConfigError("embedding line " + std::to_string(line_no) + ": bad value '" +
                                      fields[i] + "'");
                vec.push_back(v);
            }
            if (table.dim == 0) table.dim = vec.size();
            if (vec.size() != table.dim)
                throw ConfigError("embedding line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.dim) + " values, got " +
                                  std::to_string(vec.size()));
            std::string key;
            key.reserve(fields[0].size());
            for (char c : fields[0]) key.push_back(detail::ascii_lower(c));
            table.entries[key] = std::move(vec);
        }
        if (have_header && declared_count != 0 && declared_count != table.entries.size())
            throw ConfigError("embedding header declares " + std::to_string(declared_count) +
                              " tokens, file has " + std::to_string(table.entries.size()));
        return table;
    }

    static EmbeddingTable load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open embedding file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }
};

inline double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) throw Error("cosine_similarity: dimension mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) throw ZeroVector("cosine_similarity: zero vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

// Lowercased letter runs; punctuation and digits split tokens.
inline std::vector<std::string> tokenize_phrase(std::string_view phrase) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : phrase) {
        if (detail::is_ascii_letter(c)) {
            cur.push_back(detail::ascii_lower(c));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// Mean of in-vocabulary token vectors; nullopt when every token is OOV.
inline std::optional<std::vector<double>> embed_phrase(const std::vector<std::string>& words,
                                                       const EmbeddingTable& table) {
    std::vector<double> acc(table.dim, 0.0);
    std::size_t found = 0;
    for (const auto& w : words) {
        if (const auto* v = table.find(w)) {
            for (std::size_t i = 0; i < table.dim; ++i) acc[i] += (*v)[i];
            ++found;
        }
    }
    if (found == 0) return std::nullopt;
    for (auto& x : acc) x /= static_cast<double>(found);
    return acc;
}

} // namespace emocue
