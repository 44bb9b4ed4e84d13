#include "gram/aid.hpp"

namespace gram {

std::optional<Aid> allocate_aid(const LocalInterval& own,
                                const std::function<bool(Aid)>& in_use) {
  for (Aid a = own.start; a < own.start + own.length; ++a) {
    if (!in_use(a))
      return a;
  }
  return std::nullopt;
}

}  // namespace gram
