#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkm {

enum class Errc {
  ZeroWeight,
  NotPrimitive,
  GroupTooLarge,
  RankMismatch,
  UnknownVariable,
  ParseError,
  UnknownVertex,
  IncompleteTuple,
  NotInSpan,
  BadArgument,
};

const char* errc_name(Errc c);

/// The library-wide exception. Parse-related errors carry a 1-based
/// character position into the offending text.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message, std::size_t position = no_position)
      : std::runtime_error(message), code_(code), position_(position) {}

  Errc code() const { return code_; }
  std::size_t position() const { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

}  // namespace gkm
