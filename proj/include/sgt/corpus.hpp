#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/group.hpp"

namespace sgt {

/// One corpus record: a named generating set with an optional expected order
/// verified at load time.
struct CorpusEntry {
  std::string name;
  int degree = 0;
  std::vector<std::string> generator_strings;
  std::optional<std::uint64_t> expected_order;

  Group build() const;
};

/// Parses the corpus text format: one record per non-comment line,
///   name | degree | gen; gen; ... | expected_order
/// with the trailing field optional and '#' starting a comment.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// Reads and parses a corpus file.
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

/// The built-in corpus: C2..C12, S3, S4, A4, A5, D8, D10, D12, Q8, SL(2,3)
/// and PSL(2,7) in their standard permutation representations.
const std::vector<CorpusEntry>& builtin_corpus();

/// Builds the group and checks expected_order when present; throws
/// std::runtime_error on mismatch.
Group build_checked(const CorpusEntry& entry);

/// Entry by name, if present.
std::optional<CorpusEntry> find_entry(const std::vector<CorpusEntry>& corpus,
                                      std::string_view name);

}  // namespace sgt
