#pragma once

#include <string>

#include "sloggen/seeds.hpp"

namespace sloggen {

struct HttpProviderOptions {
  std::string url;          // e.g. "http://localhost:8080/related"
  int timeout_ms = 2000;    // connection and read timeout
  int max_retries = 2;      // additional attempts after the first
};

// Remote related-word source. Issues
//   GET <url>?word=<word>&pos=<noun|verb>&max=<k>
// and expects a JSON array of {"word": ..., "score": ...} objects in
// descending score order. Throws ProviderError after exhausting retries;
// expand_seeds treats that as zero additions for the word.
class HttpRelatedWordProvider : public RelatedWordProvider {
 public:
  explicit HttpRelatedWordProvider(HttpProviderOptions options);

  std::vector<std::string> related(const std::string& word,
                                   WordClass word_class,
                                   std::size_t max_results) const override;

 private:
  HttpProviderOptions options_;
  std::string host_;  // scheme://host:port
  std::string path_;  // leading slash
};

}  // namespace sloggen
