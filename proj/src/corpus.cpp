#include "sgt/corpus.hpp"

#include <fstream>
#include <sstream>

namespace sgt {

Group CorpusEntry::build() const {
  std::vector<Perm> gens;
  gens.reserve(generator_strings.size());
  for (const std::string& s : generator_strings) gens.push_back(parse_perm(s, degree));
  return Group(degree, std::move(gens));
}

Group build_checked(const CorpusEntry& entry) {
  Group g = entry.build();
  if (entry.expected_order && g.order() != *entry.expected_order)
    throw std::runtime_error("corpus entry " + entry.name + ": order " +
                             std::to_string(g.order()) + " does not match expected " +
                             std::to_string(*entry.expected_order));
  return g;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                      : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                          : nl - pos));
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields = split(line, '|');
    if (fields.size() < 3 || fields.size() > 4)
      throw parse_error("corpus line " + std::to_string(line_no) +
                            ": expected `name | degree | gens [| order]`",
                        line_no);
    CorpusEntry entry;
    entry.name = fields[0];
    if (entry.name.empty())
      throw parse_error("corpus line " + std::to_string(line_no) + ": empty name", line_no);
    try {
      entry.degree = std::stoi(fields[1]);
    } catch (const std::exception&) {
      throw parse_error("corpus line " + std::to_string(line_no) + " (" + entry.name +
                            "): bad degree \"" + fields[1] + "\"",
                        line_no);
    }
    for (const std::string& gs : split(fields[2], ';')) {
      if (!gs.empty()) entry.generator_strings.push_back(gs);
    }
    if (entry.generator_strings.empty())
      throw parse_error("corpus line " + std::to_string(line_no) + " (" + entry.name +
                            "): no generators",
                        line_no);
    if (fields.size() == 4 && !fields[3].empty()) {
      try {
        entry.expected_order = std::stoull(fields[3]);
      } catch (const std::exception&) {
        throw parse_error("corpus line " + std::to_string(line_no) + " (" + entry.name +
                              "): bad expected order \"" + fields[3] + "\"",
                          line_no);
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = parse_corpus(R"(
# name | degree | generators | expected order
C2  | 2  | (1 2)                          | 2
C3  | 3  | (1 2 3)                        | 3
C4  | 4  | (1 2 3 4)                      | 4
C5  | 5  | (1 2 3 4 5)                    | 5
C6  | 6  | (1 2 3 4 5 6)                  | 6
C7  | 7  | (1 2 3 4 5 6 7)                | 7
C8  | 8  | (1 2 3 4 5 6 7 8)              | 8
C9  | 9  | (1 2 3 4 5 6 7 8 9)            | 9
C10 | 10 | (1 2 3 4 5 6 7 8 9 10)         | 10
C11 | 11 | (1 2 3 4 5 6 7 8 9 10 11)      | 11
C12 | 12 | (1 2 3 4 5 6 7 8 9 10 11 12)   | 12
S3  | 3  | (1 2); (1 2 3)                 | 6
S4  | 4  | (1 2); (1 2 3 4)               | 24
A4  | 4  | (1 2 3); (2 3 4)               | 12
A5  | 5  | (1 2 3); (3 4 5)               | 60
D8  | 4  | (1 2 3 4); (1 3)               | 8
D10 | 5  | (1 2 3 4 5); (2 5)(3 4)        | 10
D12 | 6  | (1 2 3 4 5 6); (2 6)(3 5)      | 12
Q8  | 8  | (1 3 2 4)(5 7 6 8); (1 5 2 6)(3 8 4 7) | 8
SL23 | 8 | (1 6 2 3)(4 7 8 5); (1 4 7)(2 8 5)     | 24
PSL27 | 8 | (1 2 3 4 5 6 7); (1 8)(2 7)(3 4)(5 6) | 168
)");
  return corpus;
}

std::optional<CorpusEntry> find_entry(const std::vector<CorpusEntry>& corpus,
                                      std::string_view name) {
  for (const CorpusEntry& e : corpus)
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace sgt
