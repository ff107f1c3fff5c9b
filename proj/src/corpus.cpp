#include "muwm/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include "json.hpp"
#include <sstream>

#include "muwm/error.hpp"

#ifndef MUWM_DEFAULT_CORPUS_DIR
#define MUWM_DEFAULT_CORPUS_DIR "data/corpus"
#endif

namespace muwm {

IntMatrix parse_matrix(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t line_no = 1;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        for (char c : token)
            if (c != '0' && c != '1' && c != '2')
                throw ParseError("line " + std::to_string(line_no) + ": malformed token '" + token + "'");
        tokens.push_back(std::move(token));
        token.clear();
    };
    bool comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') {
            flush();
            comment = false;
            ++line_no;
        } else if (comment) {
            continue;
        } else if (c == '#') {
            flush();
            comment = true;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else if (c == '\\' && i + 1 < text.size() && text[i + 1] == '\\') {
            // LaTeX row break.
            flush();
            ++i;
        } else {
            token += c;
        }
    }
    flush();
    if (tokens.empty()) throw ParseError("no matrix rows found");
    const std::size_t n = tokens.front().size();
    for (std::size_t i = 0; i < tokens.size(); ++i)
        if (tokens[i].size() != n)
            throw ParseError("row " + std::to_string(i + 1) + " has length " + std::to_string(tokens[i].size()) +
                             ", expected " + std::to_string(n));
    if (tokens.size() != n)
        throw ParseError("found " + std::to_string(tokens.size()) + " rows of length " + std::to_string(n));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const char c = tokens[i][j];
            m.set(i, j, c == '2' ? -1 : c - '0');
        }
    return m;
}

std::string serialize_matrix(const IntMatrix& m) {
    std::string out;
    out.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const int v = m(i, j);
            out += v < 0 ? '2' : static_cast<char>('0' + v);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

IntMatrix read_matrix_file(const std::filesystem::path& path) {
    try {
        return parse_matrix(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

MuwmFamily CorpusFamily::family() const {
    std::vector<std::string> labels;
    for (const auto& m : entry.members) labels.push_back(m.label);
    return make_family(members, entry.weight, labels);
}

std::filesystem::path corpus_dir() {
    if (const char* env = std::getenv("MUWM_CORPUS_DIR"); env != nullptr && *env != '\0') return env;
    return MUWM_DEFAULT_CORPUS_DIR;
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& dir) {
    const auto path = dir / "manifest.json";
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    std::vector<CorpusEntry> out;
    try {
        if (j.at("format").get<std::string>() != "muwm-corpus/1")
            throw ParseError(path.string() + ": unknown manifest format");
        for (const auto& f : j.at("families")) {
            CorpusEntry e;
            e.id = f.at("id").get<std::string>();
            e.label = f.at("label").get<std::string>();
            e.order = f.at("order").get<std::size_t>();
            e.weight = f.at("weight").get<int>();
            e.expected_size = f.at("expected_size").get<std::size_t>();
            e.source_tables = f.at("source_tables").get<std::vector<std::string>>();
            if (f.contains("note")) e.note = f.at("note").get<std::string>();
            for (const auto& m : f.at("members")) {
                CorpusMember cm;
                cm.file = m.at("file").get<std::string>();
                cm.label = m.at("label").get<std::string>();
                cm.checksum = std::stoull(m.at("fnv1a64").get<std::string>(), nullptr, 16);
                e.members.push_back(std::move(cm));
            }
            if (e.members.size() != e.expected_size)
                throw ParseError(e.id + ": manifest lists " + std::to_string(e.members.size()) +
                                 " members, expected " + std::to_string(e.expected_size));
            out.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError(path.string() + ": bad checksum field");
    }
    return out;
}

namespace {

CorpusFamily read_family(const CorpusEntry& e, const std::filesystem::path& dir) {
    CorpusFamily fam{e, {}};
    for (const auto& m : e.members) {
        const auto path = dir / m.file;
        const auto bytes = read_file(path);
        if (fnv1a64(bytes) != m.checksum) throw ParseError(path.string() + ": checksum mismatch");
        IntMatrix mat;
        try {
            mat = parse_matrix(bytes);
        } catch (const ParseError& err) {
            throw ParseError(path.string() + ": " + err.what());
        }
        if (mat.rows() != e.order)
            throw ParseError(path.string() + ": order " + std::to_string(mat.rows()) + ", manifest says " +
                             std::to_string(e.order));
        fam.members.push_back(std::move(mat));
    }
    return fam;
}

}  // namespace

std::vector<CorpusFamily> load_corpus(const std::filesystem::path& dir) {
    std::vector<CorpusFamily> out;
    for (const auto& e : load_manifest(dir)) out.push_back(read_family(e, dir));
    return out;
}

CorpusFamily load_family(const std::string& id, const std::filesystem::path& dir) {
    for (const auto& e : load_manifest(dir))
        if (e.id == id) return read_family(e, dir);
    throw Error("no corpus family with id " + id);
}

}  // namespace muwm
