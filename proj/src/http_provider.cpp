#include "sloggen/http_provider.hpp"

#include <algorithm>

#include <httplib.h>
#include <json.hpp>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

std::string percent_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    const auto byte = static_cast<unsigned char>(c);
    if (std::isalnum(byte) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += c;
    } else {
      out += '%';
      out += kHex[byte >> 4];
      out += kHex[byte & 0x0F];
    }
  }
  return out;
}

}  // namespace

HttpRelatedWordProvider::HttpRelatedWordProvider(HttpProviderOptions options)
    : options_(std::move(options)) {
  const auto& url = options_.url;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("provider url must start with http:// or https://");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    host_ = url;
    path_ = "/";
  } else {
    host_ = url.substr(0, path_start);
    path_ = url.substr(path_start);
  }
}

std::vector<std::string> HttpRelatedWordProvider::related(
    const std::string& word, WordClass word_class,
    std::size_t max_results) const {
  const std::string target =
      path_ + "?word=" + percent_encode(word) +
      "&pos=" + (word_class == WordClass::Noun ? "noun" : "verb") +
      "&max=" + std::to_string(max_results);

  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    httplib::Client client(host_);
    client.set_connection_timeout(options_.timeout_ms / 1000,
                                  (options_.timeout_ms % 1000) * 1000);
    client.set_read_timeout(options_.timeout_ms / 1000,
                            (options_.timeout_ms % 1000) * 1000);

    const auto response = client.Get(target);
    if (!response) {
      last_error = "connection failed: " + httplib::to_string(response.error());
      continue;
    }
    if (response->status != 200) {
      last_error = "HTTP status " + std::to_string(response->status);
      continue;
    }

    nlohmann::json body;
    try {
      body = nlohmann::json::parse(response->body);
    } catch (const nlohmann::json::exception& e) {
      last_error = std::string("bad JSON: ") + e.what();
      continue;
    }
    if (!body.is_array()) {
      last_error = "expected a JSON array";
      continue;
    }

    // Entries arrive in descending score order; re-sorting makes the
    // ranking robust against sloppy servers.
    std::vector<std::pair<double, std::string>> entries;
    for (const auto& item : body) {
      if (!item.is_object() || !item.contains("word")) continue;
      const double score =
          item.contains("score") ? item["score"].get<double>() : 0.0;
      entries.emplace_back(score, item["word"].get<std::string>());
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) {
                       return a.first > b.first;
                     });

    std::vector<std::string> words;
    for (const auto& [score, w] : entries) {
      if (words.size() >= max_results) break;
      words.push_back(w);
    }
    return words;
  }
  throw ProviderError("related-word request for '" + word +
                      "' failed: " + last_error);
}

}  // namespace sloggen
