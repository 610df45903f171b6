#pragma once

#include <string>

namespace htm {

/// Porter suffix-stripping stemmer (the classic five-step algorithm, matching
/// the author's reference implementation: words of length <= 2 are left
/// unchanged, step 2 maps -bli to -ble and -logi to -log).
/// Input must be lowercase ASCII letters; other inputs are returned unchanged.
std::string stem_porter(const std::string& token);

}  // namespace htm
