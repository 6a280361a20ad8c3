#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace plancheck::oracle {

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<double> embed(const std::string& text) = 0;
  virtual std::size_t dim() const = 0;
};

/// Signed feature hashing of lower-cased word unigrams and bigrams,
/// L2-normalized.
class MockEmbedder : public Embedder {
 public:
  explicit MockEmbedder(std::size_t dim = 1536, std::uint64_t seed = 0);

  std::vector<double> embed(const std::string& text) override;
  std::size_t dim() const override { return dim_; }

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

std::vector<std::string> word_tokens(const std::string& text);

}  // namespace plancheck::oracle
