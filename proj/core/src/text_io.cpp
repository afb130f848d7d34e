#include "mosaic/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mosaic {

namespace {

using ordered_json = nlohmann::ordered_json;

Box box_from_json(const ordered_json& j, int dim) {
    if (!j.is_object() || !j.contains("min") || !j.contains("max"))
        throw ParseError("box needs \"min\" and \"max\" arrays");
    Box b;
    b.lo = j.at("min").get<CoordVec>();
    b.hi = j.at("max").get<CoordVec>();
    if (b.dim() != dim || static_cast<int>(b.hi.size()) != dim)
        throw ParseError("box coordinate count does not match \"dim\"");
    return b;
}

}  // namespace

namespace {

void append_box(std::ostringstream& os, const Box& b) {
    os << "{\"min\": [";
    for (int j = 0; j < b.dim(); ++j) os << (j ? ", " : "") << b.lo[j];
    os << "], \"max\": [";
    for (int j = 0; j < b.dim(); ++j) os << (j ? ", " : "") << b.hi[j];
    os << "]}";
}

}  // namespace

std::string floorplan_to_json(const Floorplan& fp) {
    std::ostringstream os;
    os << "{\n  \"dim\": " << fp.dim() << ",\n  \"bounds\": ";
    append_box(os, fp.bounds());
    os << ",\n  \"blocks\": [\n";
    for (int i = 0; i < fp.block_count(); ++i) {
        os << "    ";
        append_box(os, fp.blocks()[i]);
        os << (i + 1 < fp.block_count() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

Floorplan floorplan_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("dim") || !j.contains("bounds") || !j.contains("blocks"))
            throw ParseError("floorplan JSON needs \"dim\", \"bounds\" and \"blocks\"");
        const int dim = j.at("dim").get<int>();
        if (dim < 1) throw ParseError("\"dim\" must be >= 1");
        const Box bounds = box_from_json(j.at("bounds"), dim);
        std::vector<Box> blocks;
        for (const ordered_json& jb : j.at("blocks")) blocks.push_back(box_from_json(jb, dim));
        return Floorplan::validate(dim, bounds, std::move(blocks));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid floorplan JSON: ") + e.what());
    }
}

std::string permutation_to_text(const DPermutation& p) {
    std::ostringstream os;
    for (const auto& perm : p.perms) {
        for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << perm[i] + 1;
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<int> check_permutation(std::vector<int> vals, const std::string& line) {
    const int n = static_cast<int>(vals.size());
    std::vector<bool> seen(n, false);
    for (int& v : vals) {
        if (v < 1 || v > n || seen[v - 1])
            throw ParseError("not a permutation of 1.." + std::to_string(n) + ": " + line);
        seen[v - 1] = true;
        --v;  // 0-based internally
    }
    return vals;
}

}  // namespace

DPermutation permutation_from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line = line.substr(start);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty permutation input");

    DPermutation p;
    if (lines.size() == 1 &&
        lines[0].find_first_not_of("0123456789|") == std::string::npos) {
        // compact "12435|34125" form, single digits only
        std::vector<std::vector<int>> perms;
        std::istringstream ps(lines[0]);
        std::string word;
        while (std::getline(ps, word, '|')) {
            if (word.empty()) throw ParseError("empty permutation in compact form");
            std::vector<int> vals;
            for (char c : word) vals.push_back(c - '0');
            perms.push_back(check_permutation(std::move(vals), word));
        }
        p.perms = std::move(perms);
    } else {
        for (const std::string& l : lines) {
            std::istringstream ls(l);
            std::vector<int> vals;
            int v;
            while (ls >> v) vals.push_back(v);
            if (!ls.eof()) throw ParseError("bad permutation line: " + l);
            p.perms.push_back(check_permutation(std::move(vals), l));
        }
    }
    p.dims = static_cast<int>(p.perms.size()) + 1;
    for (const auto& perm : p.perms)
        if (perm.size() != p.perms[0].size())
            throw ParseError("permutations must all have the same size");
    return p;
}

void save_frontier(const Frontier& f, std::ostream& os) {
    os << "mosaic-frontier 1\n";
    os << "dim " << f.dim << "\n";
    os << "level " << f.level << "\n";
    os << "counts";
    for (std::size_t i = 0; i < f.counts.size(); ++i) os << (i ? "," : " ") << f.counts[i];
    os << "\n";
    for (const auto& [key, count] : f.entries) os << key << " " << count << "\n";
}

Frontier load_frontier(std::istream& is) {
    Frontier f;
    std::string line;
    if (!std::getline(is, line) || line != "mosaic-frontier 1")
        throw ParseError("not a frontier file (missing magic line)");
    std::string word;
    if (!(is >> word >> f.dim) || word != "dim") throw ParseError("frontier: missing dim");
    if (!(is >> word >> f.level) || word != "level") throw ParseError("frontier: missing level");
    if (!(is >> word) || word != "counts") throw ParseError("frontier: missing counts");
    std::string counts_csv;
    is >> counts_csv;
    std::istringstream cs(counts_csv);
    std::string c;
    while (std::getline(cs, c, ','))
        try {
            f.counts.push_back(std::stoull(c));
        } catch (const std::exception&) {
            throw ParseError("frontier: bad count " + c);
        }
    if (static_cast<int>(f.counts.size()) != f.level)
        throw ParseError("frontier: counts do not match level");
    std::string key;
    std::uint64_t count;
    while (is >> key >> count) f.entries.emplace_back(key, count);
    if (f.entries.empty()) throw ParseError("frontier: no entries");
    return f;
}

void save_frontier_file(const Frontier& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path);
    save_frontier(f, os);
}

Frontier load_frontier_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot read " + path);
    return load_frontier(is);
}

}  // namespace mosaic
