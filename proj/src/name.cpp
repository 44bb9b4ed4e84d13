#include "gram/name.hpp"

#include <sstream>
#include <stdexcept>

namespace gram {

namespace {

std::vector<std::string> parse_components(const std::string& text) {
  if (text.empty() || text[0] != '/')
    throw std::invalid_argument("name must start with '/': " + text);
  std::vector<std::string> comps;
  std::string seg;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '/') {
      if (seg.empty())
        throw std::invalid_argument("empty name segment in: " + text);
      comps.push_back(std::move(seg));
      seg.clear();
    } else {
      seg.push_back(text[i]);
    }
  }
  return comps;
}

std::string components_to_string(const std::vector<std::string>& comps) {
  std::ostringstream out;
  for (const auto& c : comps)
    out << '/' << c;
  return out.str();
}

}  // namespace

ContentName ContentName::parse(const std::string& text) {
  auto comps = parse_components(text);
  if (comps.empty())
    throw std::invalid_argument("content name needs at least one component");
  return ContentName(std::move(comps));
}

std::string ContentName::to_string() const {
  return components_to_string(components_);
}

NamePrefix NamePrefix::parse(const std::string& text) {
  return NamePrefix(parse_components(text));
}

std::string NamePrefix::to_string() const {
  return components_to_string(components_);
}

bool NamePrefix::matches(const ContentName& name) const {
  if (components_.size() > name.size())
    return false;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i] != name.components()[i])
      return false;
  return true;
}

std::optional<NamePrefix> prefix_match(const ContentName& name,
                                       const std::vector<NamePrefix>& prefixes) {
  const NamePrefix* best = nullptr;
  for (const auto& p : prefixes) {
    if (p.matches(name) && (best == nullptr || p.size() > best->size()))
      best = &p;
  }
  if (best == nullptr)
    return std::nullopt;
  return *best;
}

std::size_t hash_components(const std::vector<std::string>& comps) {
  std::size_t h = 1469598103934665603ull;
  std::hash<std::string> sh;
  for (const auto& c : comps) {
    h ^= sh(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gram
