#include "povmkit/halfint.hpp"

#include <cstdlib>
#include <stdexcept>

namespace povmkit {

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

HalfInt parse_half_int(const std::string& text) {
  const auto bad = [&text]() {
    return std::invalid_argument("cannot parse half-integer from \"" + text + "\"");
  };
  if (text.empty()) throw bad();

  const std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const int whole = std::stoi(text, &used);
      if (used != text.size()) throw bad();
      return HalfInt(whole);
    }
    const int p = std::stoi(text.substr(0, slash), &used);
    if (used != slash) throw bad();
    const std::string denom = text.substr(slash + 1);
    const int q = std::stoi(denom, &used);
    if (used != denom.size()) throw bad();
    if (q == 1) return HalfInt(p);
    if (q == 2) return HalfInt::from_twice(p);
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  throw bad();
}

}  // namespace povmkit
