#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sloggen {

// Dense word vectors in the plain text format `word v1 v2 ... vd`, one word
// per line, with an optional `<vocab_size> <dim>` header line. Words are
// case-folded on load; duplicate words keep their first entry.
class EmbeddingTable {
 public:
  static EmbeddingTable load(const std::string& path);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vocab_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }

  // Vector for a case-folded word, or nullopt when out of vocabulary.
  std::optional<std::span<const double>> find(std::string_view word) const;
  bool contains(std::string_view word) const;

  // Mean vector over the in-vocabulary words, one contribution per
  // occurrence. nullopt when no word is in vocabulary.
  std::optional<std::vector<double>> centroid(
      const std::vector<std::string>& words) const;

  static double cosine(std::span<const double> a, std::span<const double> b);
  static double euclidean(std::span<const double> a,
                          std::span<const double> b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> vocab_;
  std::vector<double> data_;  // vocab_.size() * dim_, row-major
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace sloggen
