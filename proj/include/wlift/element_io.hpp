#pragma once

#include <string>

#include "wlift/root_datum.hpp"
#include "wlift/weyl.hpp"

namespace wlift {

/// Word grammar: digit string ("2323432134"), or comma-separated indices ("10,11,3");
/// '-' separates segments that are concatenated; trailing 'd' characters add delta factors.
/// "e" or an empty body is the identity.
TwistedWeylElt parse_element(const RootDatum& rd, const std::string& text);

Word parse_word(const std::string& text, int rank);

/// Reduced word in the same grammar, comma-separated when some index exceeds 9.
std::string format_element(const RootDatum& rd, const TwistedWeylElt& x);
std::string format_word(const Word& w, int j = 0);

}  // namespace wlift
