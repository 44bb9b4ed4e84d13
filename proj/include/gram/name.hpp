#ifndef GRAM_NAME_HPP
#define GRAM_NAME_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gram {

// Hierarchical content name, textual form "/seg1/seg2/...".
// Equality is component-wise; objects match exactly, FIB entries by prefix.
class ContentName {
public:
  ContentName() = default;
  explicit ContentName(std::vector<std::string> components)
      : components_(std::move(components)) {}

  // Parses "/a/b/c". Throws std::invalid_argument on empty or malformed input.
  static ContentName parse(const std::string& text);

  const std::vector<std::string>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  std::string to_string() const;

  bool operator==(const ContentName& o) const { return components_ == o.components_; }
  bool operator!=(const ContentName& o) const { return !(*this == o); }
  bool operator<(const ContentName& o) const { return components_ < o.components_; }

private:
  std::vector<std::string> components_;
};

// A prefix P matches name N iff P's components are a prefix of N's.
class NamePrefix {
public:
  NamePrefix() = default;
  explicit NamePrefix(std::vector<std::string> components)
      : components_(std::move(components)) {}

  static NamePrefix parse(const std::string& text);

  const std::vector<std::string>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  bool matches(const ContentName& name) const;

  std::string to_string() const;

  bool operator==(const NamePrefix& o) const { return components_ == o.components_; }
  bool operator!=(const NamePrefix& o) const { return !(*this == o); }
  bool operator<(const NamePrefix& o) const { return components_ < o.components_; }

private:
  std::vector<std::string> components_;
};

// Longest prefix match over a set of prefixes; absence is a valid result.
std::optional<NamePrefix> prefix_match(const ContentName& name,
                                       const std::vector<NamePrefix>& prefixes);

std::size_t hash_components(const std::vector<std::string>& comps);

struct ContentNameHash {
  std::size_t operator()(const ContentName& n) const { return hash_components(n.components()); }
};

struct NamePrefixHash {
  std::size_t operator()(const NamePrefix& p) const { return hash_components(p.components()); }
};

}  // namespace gram

#endif  // GRAM_NAME_HPP
