#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "muwm/wmatrix.hpp"

namespace muwm {

/// Whitespace-separated row strings over {0, 1, 2} with 2 for -1. Rows may
/// share a line; "\\" separators and '#' comments are ignored. Throws
/// ParseError on a bad token, unequal row lengths or a row count that differs
/// from the row length.
IntMatrix parse_matrix(std::string_view text);
/// One row per line.
std::string serialize_matrix(const IntMatrix& m);

IntMatrix read_matrix_file(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view bytes);

struct CorpusMember {
    std::string file;
    std::string label;
    std::uint64_t checksum = 0;
};

struct CorpusEntry {
    std::string id;
    std::string label;
    std::size_t order = 0;
    int weight = 0;
    std::size_t expected_size = 0;
    std::vector<std::string> source_tables;
    std::optional<std::string> note;
    std::vector<CorpusMember> members;
};

struct CorpusFamily {
    CorpusEntry entry;
    std::vector<IntMatrix> members;

    /// Throws unless the members form a valid family.
    MuwmFamily family() const;
};

/// MUWM_CORPUS_DIR if set, else the bundled data directory.
std::filesystem::path corpus_dir();

/// Throws ParseError if the manifest is malformed or a family's member list
/// differs from its expected size.
std::vector<CorpusEntry> load_manifest(const std::filesystem::path& dir);

/// Reads every member, checking checksums and shapes against the manifest.
std::vector<CorpusFamily> load_corpus(const std::filesystem::path& dir = corpus_dir());

/// The family with the given id, e.g. "W16_46".
CorpusFamily load_family(const std::string& id, const std::filesystem::path& dir = corpus_dir());

}  // namespace muwm
