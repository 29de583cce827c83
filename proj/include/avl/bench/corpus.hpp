#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avl::bench {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unique, non-empty words in first-occurrence order.
struct Corpus {
  std::vector<std::string> words;
  std::string source_path;
  std::size_t original_count = 0;  // lines read, before filtering
  std::string sha256;              // hex digest of the raw bytes
};

/// Reads a newline-delimited word list. Lines are whitespace-trimmed; blank
/// lines and repeats are dropped. Throws CorpusError when the file cannot be
/// read or nothing remains after filtering.
Corpus load_corpus(const std::string& path);

/// Same filtering as load_corpus, applied to text already in memory.
Corpus parse_corpus(std::string_view text, std::string source_path = "<memory>");

std::string sha256_hex(std::string_view bytes);

}  // namespace avl::bench
