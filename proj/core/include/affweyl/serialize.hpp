#pragma once

#include "affweyl/affine.hpp"
#include "affweyl/root_system.hpp"
#include "affweyl/verify.hpp"
#include "affweyl/weyl.hpp"

#include <string>
#include <string_view>

namespace affweyl {

// JSON wire formats. Words carry the composition convention explicitly:
// {"letters":[...],"order":"right-to-left"}. Rationals travel as "p/q" strings.

std::string word_to_json(const SimpleWord& w);
SimpleWord word_from_json(std::string_view text);

std::string weight_to_json(const AffineWeight& w);
AffineWeight weight_from_json(std::string_view text);

std::string affine_root_to_json(const RootSystem& rs, const AffineRoot& root);
AffineRoot affine_root_from_json(const RootSystem& rs, std::string_view text);

std::string report_to_json(const VerificationReport& report);

} // namespace affweyl
