#include "gkm/rat.hpp"

#include <cctype>
#include <cstddef>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  std::size_t slash = text.find('/');
  bool well_formed;
  if (slash == std::string::npos) {
    well_formed = all_digits(text, start, text.size());
  } else {
    well_formed = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!well_formed) {
    throw Error(Errc::ParseError, "malformed rational \"" + text + "\"");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw Error(Errc::ParseError, "malformed rational \"" + text + "\"");
  }
  if (q.get_den() == 0) {
    throw Error(Errc::ParseError, "zero denominator in \"" + text + "\"");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace gkm
