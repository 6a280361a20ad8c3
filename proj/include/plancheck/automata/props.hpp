#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plancheck::automata {

using LabelSet = std::uint32_t;  // bit i set iff proposition i holds

inline constexpr std::size_t kMaxProps = 16;

/// Ordered, duplicate-free list of atomic proposition names.
class PropSet {
 public:
  PropSet() = default;
  explicit PropSet(std::vector<std::string> names);

  /// Sorted union of the given names; duplicates collapse.
  static PropSet of(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index(const std::string& name) const;
  bool contains(const std::string& name) const { return index(name).has_value(); }

  LabelSet mask_of(const std::vector<std::string>& names) const;  // throws on unknown names
  std::vector<std::string> names_in(LabelSet mask) const;
  std::string format(LabelSet mask) const;  // "{a, b}"

  bool operator==(const PropSet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Re-expresses `mask` over `from` as a mask over `to` (which must contain
/// every proposition set in `mask`).
LabelSet remap(LabelSet mask, const PropSet& from, const PropSet& to);

}  // namespace plancheck::automata
