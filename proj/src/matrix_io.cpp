#include "chepta/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chepta::io {

using nlohmann::json;

namespace {

Rational scalar_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
    }
    throw InvalidInput(where + ": expected a scalar string");
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> nonblank_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

ExactMatrix parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw InvalidInput("matrix file: field \"n\" missing or not an integer");
    const int n = doc["n"].get<int>();
    if (n < kMinOrder)
        throw InvalidInput("order too small: n = " + std::to_string(n) + ", need n >= 8");

    HeptaBands<Rational> bands;
    for (Band b : kAllBands) {
        const std::string key(band_key(b));
        if (!doc.contains(key) || !doc[key].is_array())
            throw InvalidInput("matrix file: field \"" + key + "\" missing or not an array");
        const auto& arr = doc[key];
        if (static_cast<int>(arr.size()) != n)
            throw InvalidInput("matrix file: field \"" + key + "\" has length " +
                               std::to_string(arr.size()) + ", expected " + std::to_string(n));
        for (std::size_t k = 0; k < arr.size(); ++k)
            bands[b].push_back(scalar_from_json(arr[k], key + "[" + std::to_string(k + 1) + "]"));
    }
    return ExactMatrix::build(n, std::move(bands));
}

std::string matrix_to_json(const ExactMatrix& m) {
    json doc = json::object();
    doc["n"] = m.order();
    for (Band b : kAllBands) {
        json arr = json::array();
        for (const auto& x : m.bands()[b]) arr.push_back(x.to_string());
        doc[std::string(band_key(b))] = std::move(arr);
    }
    return doc.dump() + "\n";
}

DenseMatrix<Rational> parse_dense_csv(std::string_view text) {
    auto lines = nonblank_lines(text);
    const int n = static_cast<int>(lines.size());
    DenseMatrix<Rational> m(n);
    for (int i = 1; i <= n; ++i) {
        auto cells = split(lines[static_cast<std::size_t>(i - 1)], ',');
        if (static_cast<int>(cells.size()) != n)
            throw InvalidInput("dense CSV row " + std::to_string(i) + " has " +
                               std::to_string(cells.size()) + " entries, expected " +
                               std::to_string(n));
        for (int j = 1; j <= n; ++j) {
            try {
                m(i, j) = Rational::parse(cells[static_cast<std::size_t>(j - 1)]);
            } catch (const InvalidInput& e) {
                throw InvalidInput("dense CSV (" + std::to_string(i) + "," + std::to_string(j) +
                                   "): " + e.what());
            }
        }
    }
    return m;
}

std::string dense_to_csv(const DenseMatrix<Rational>& m) {
    std::string out;
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) out += ',';
            out += m(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

std::vector<Rational> parse_rhs(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    std::vector<Rational> r;
    if (first != std::string_view::npos && text[first] == '[') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw InvalidInput(std::string("rhs file is not valid JSON: ") + e.what());
        }
        for (std::size_t k = 0; k < doc.size(); ++k)
            r.push_back(scalar_from_json(doc[k], "rhs[" + std::to_string(k + 1) + "]"));
        return r;
    }
    auto lines = nonblank_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        try {
            r.push_back(Rational::parse(lines[k]));
        } catch (const InvalidInput& e) {
            throw InvalidInput("rhs[" + std::to_string(k + 1) + "]: " + e.what());
        }
    }
    return r;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << contents;
}

ExactMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix_json(read_file(path)); }

}  // namespace chepta::io
