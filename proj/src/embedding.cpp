#include "sloggen/embedding.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sloggen/errors.hpp"
#include "sloggen/text.hpp"

namespace sloggen {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> parts;
  std::string part;
  while (in >> part) parts.push_back(std::move(part));
  return parts;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double parse_value(const std::string& s, const std::string& path,
                   std::size_t line_no) {
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw DataError(path + ":" + std::to_string(line_no) +
                    ": bad vector component: " + s);
  }
  return value;
}

}  // namespace

EmbeddingTable EmbeddingTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path);

  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto parts = split_ws(line);
    if (first_content_line) {
      first_content_line = false;
      // Optional `<vocab_size> <dim>` header.
      if (parts.size() == 2 && is_integer(parts[0]) && is_integer(parts[1])) {
        table.dim_ = static_cast<std::size_t>(std::stoull(parts[1]));
        continue;
      }
    }
    if (parts.size() < 2) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected `word v1 ... vd`");
    }
    const std::size_t entry_dim = parts.size() - 1;
    if (table.dim_ == 0) table.dim_ = entry_dim;
    if (entry_dim != table.dim_) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": dimension mismatch (" + std::to_string(entry_dim) +
                      " vs " + std::to_string(table.dim_) + ")");
    }

    std::string word = casefold(parts[0]);
    if (table.index_.count(word) > 0) continue;  // keep the first entry

    table.index_.emplace(word, table.vocab_.size());
    table.vocab_.push_back(std::move(word));
    for (std::size_t i = 1; i < parts.size(); ++i) {
      table.data_.push_back(parse_value(parts[i], path, line_no));
    }
  }

  if (table.vocab_.empty()) {
    throw DataError(path + ": no embedding entries");
  }
  return table;
}

std::optional<std::span<const double>> EmbeddingTable::find(
    std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const double>(data_.data() + it->second * dim_, dim_);
}

bool EmbeddingTable::contains(std::string_view word) const {
  return index_.count(std::string(word)) > 0;
}

std::optional<std::vector<double>> EmbeddingTable::centroid(
    const std::vector<std::string>& words) const {
  std::vector<double> sum(dim_, 0.0);
  std::size_t hits = 0;
  for (const auto& word : words) {
    if (const auto vec = find(word)) {
      for (std::size_t i = 0; i < dim_; ++i) sum[i] += (*vec)[i];
      ++hits;
    }
  }
  if (hits == 0) return std::nullopt;
  for (double& v : sum) v /= static_cast<double>(hits);
  return sum;
}

double EmbeddingTable::cosine(std::span<const double> a,
                              std::span<const double> b) {
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double EmbeddingTable::euclidean(std::span<const double> a,
                                 std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace sloggen
