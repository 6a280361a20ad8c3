#include "plancheck/automata/props.hpp"

#include <algorithm>

#include "plancheck/error.hpp"

namespace plancheck::automata {

PropSet::PropSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxProps) {
    throw Error(ErrorKind::invalid_argument,
                "at most " + std::to_string(kMaxProps) + " atomic propositions are supported, got " +
                    std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::invalid_argument, "empty proposition name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorKind::invalid_argument, "duplicate proposition '" + names_[i] + "'");
      }
    }
  }
}

PropSet PropSet::of(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return PropSet(std::move(names));
}

std::optional<std::size_t> PropSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

LabelSet PropSet::mask_of(const std::vector<std::string>& names) const {
  LabelSet m = 0;
  for (const auto& n : names) {
    auto i = index(n);
    if (!i) throw Error(ErrorKind::proposition_mismatch, "proposition '" + n + "' is not declared");
    m |= LabelSet{1} << *i;
  }
  return m;
}

std::vector<std::string> PropSet::names_in(LabelSet mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (mask & (LabelSet{1} << i)) out.push_back(names_[i]);
  }
  return out;
}

std::string PropSet::format(LabelSet mask) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names_in(mask)) {
    if (!first) out += ", ";
    first = false;
    out += n;
  }
  return out + "}";
}

LabelSet remap(LabelSet mask, const PropSet& from, const PropSet& to) {
  return to.mask_of(from.names_in(mask));
}

}  // namespace plancheck::automata
