#include "toriclift/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace toriclift {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::string read_whole_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

SimplicialComplex parse_complex_text(std::istream& in) {
    std::string line;
    int m = -1;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ls(body);
        if (m < 0) {
            if (!(ls >> m) || m < 0) throw std::runtime_error("complex file: bad vertex count line");
            std::string rest;
            if (ls >> rest) throw std::runtime_error("complex file: junk after vertex count");
            continue;
        }
        std::vector<int> facet;
        int v;
        while (ls >> v) facet.push_back(v);
        if (!ls.eof()) throw std::runtime_error("complex file: non-integer facet entry");
        facets.push_back(std::move(facet));
    }
    if (m < 0) throw std::runtime_error("complex file: missing vertex count");
    return from_facets(m, facets);
}

SimplicialComplex parse_complex_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    std::vector<std::vector<int>> facets = j.at("facets").get<std::vector<std::vector<int>>>();
    SimplicialComplex k = from_facets(m, facets);
    if (j.contains("labels")) {
        k.labels.assign(static_cast<std::size_t>(m), "");
        for (int v = 1; v <= m; ++v) k.labels[static_cast<std::size_t>(v - 1)] = std::to_string(v);
        for (auto& [key, val] : j.at("labels").items()) {
            int v = std::stoi(key);
            if (v < 1 || v > m) throw std::runtime_error("complex json: label index out of range");
            k.labels[static_cast<std::size_t>(v - 1)] = val.get<std::string>();
        }
    }
    return k;
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::string text = read_whole_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    bool is_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (first != std::string::npos && text[first] == '{') is_json = true;
    if (is_json) return parse_complex_json(text);
    std::istringstream in(text);
    return parse_complex_text(in);
}

std::string complex_to_text(const SimplicialComplex& k) {
    std::ostringstream os;
    os << k.m << "\n";
    for (VertexSet f : k.facets) {
        bool first = true;
        for (int v : set_to_vertices(f)) {
            if (!first) os << ' ';
            os << v;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["m"] = k.m;
    std::vector<std::vector<int>> facets;
    for (VertexSet f : k.facets) facets.push_back(set_to_vertices(f));
    j["facets"] = facets;
    if (!k.labels.empty()) {
        nlohmann::json labels;
        for (int v = 1; v <= k.m; ++v) labels[std::to_string(v)] = k.label(v);
        j["labels"] = labels;
    }
    return j.dump(2);
}

MatrixFile parse_matrix_text(std::istream& in) {
    MatrixFile out;
    std::vector<std::vector<long long>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        if (rows.empty() && out.complex_ref.empty()) {
            std::istringstream probe(body);
            std::string word;
            probe >> word;
            if (word == "complex" || word == "complex:") {
                std::string rest;
                std::getline(probe, rest);
                auto b = rest.find_first_not_of(" \t:");
                out.complex_ref = b == std::string::npos ? "" : rest.substr(b);
                continue;
            }
        }
        std::istringstream ls(body);
        std::vector<long long> row;
        long long v;
        while (ls >> v) {
            if (v < -1 || v > 1) throw std::runtime_error("matrix file: entry outside {-1,0,1}");
            row.push_back(v);
        }
        if (!ls.eof()) throw std::runtime_error("matrix file: non-integer entry");
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("matrix file: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("matrix file: no rows");
    out.entries = IntMatrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            out.entries.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return out;
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    return parse_matrix_text(in);
}

BitMatrix to_gf2(const IntMatrix& m) {
    if (!m.entries_in(0, 1)) throw std::runtime_error("to_gf2: entries must be 0/1");
    return m.mod2();
}

std::string matrix_to_text(const IntMatrix& m) { return m.to_string(); }
std::string matrix_to_text(const BitMatrix& m) { return m.to_string(); }

std::string certificate_to_json(const LiftCertificate& cert) {
    nlohmann::json j;
    std::vector<std::vector<long long>> matrix;
    for (int i = 0; i < cert.lift.rows(); ++i) {
        std::vector<long long> row;
        for (int c = 0; c < cert.lift.cols(); ++c) row.push_back(cert.lift.at(i, c));
        matrix.push_back(std::move(row));
    }
    j["matrix"] = matrix;
    j["method"] = to_string(cert.method);
    j["minors-checked"] = cert.minors_checked();
    j["orientation"] = cert.dual_form ? "dual" : "primal";
    std::vector<std::vector<int>> source;
    for (int i = 0; i < cert.source.rows(); ++i) {
        std::vector<int> row;
        for (int c = 0; c < cert.source.cols(); ++c) row.push_back(cert.source.get(i, c));
        source.push_back(std::move(row));
    }
    j["source-mod2"] = source;
    j["source-is-dj-translate"] = cert.source_is_translate;
    return j.dump(2);
}

} // namespace toriclift
