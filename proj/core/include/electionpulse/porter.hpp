#pragma once

#include <string>
#include <string_view>

namespace electionpulse::preprocess {

/// Classic Porter stemmer, matching the reference C implementation
/// (including its "bli"->"ble" and "logi"->"log" rules).
/// Tokens containing anything other than a-z are returned unchanged.
std::string stem(std::string_view token);

/// stem() applied until the result stops changing, so that
/// stem_fixed(stem_fixed(w)) == stem_fixed(w).
std::string stem_fixed(std::string_view token);

}  // namespace electionpulse::preprocess
