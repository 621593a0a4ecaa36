#include "starideal/core/star.hpp"

namespace starideal {

std::string to_string(StarKind kind) {
  switch (kind) {
    case StarKind::identity: return "identity";
    case StarKind::divisorial: return "divisorial";
    case StarKind::t: return "t";
    case StarKind::w: return "w";
    case StarKind::finite_character: return "finite-character";
    case StarKind::meet: return "meet";
    case StarKind::table: return "table";
    case StarKind::family: return "family";
  }
  return "unknown";
}

}  // namespace starideal
