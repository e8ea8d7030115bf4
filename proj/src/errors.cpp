#include "gkm/errors.hpp"

namespace gkm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::IncompleteTuple: return "IncompleteTuple";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

}  // namespace gkm
