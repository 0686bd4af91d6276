#pragma once

// Command-line front end: config files, class tokens, reports, SVG atlases.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kuznum/walls.hpp"

namespace kuznum::cli {

struct Config {
    std::vector<VarietyDesc> varieties;
    std::optional<std::string> default_variety;
};

/// Throws ParseError on malformed documents, duplicate names or an unknown default.
Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);

/// Config entries first, then presets; case-insensitive. nullptr if unknown.
const VarietyDesc* find_variety(const Config& config, std::string_view name);

/// "O", "O(k)", "S" or "c0,c1,...,cn". With allow_truncated, "c0,c1,c2" is
/// accepted as well. Throws ParseError.
ChernVector parse_class(std::string_view token, const VarietyDesc& x, bool allow_truncated = false);

/// Tokens separated by ';'. Empty string gives an empty list.
std::vector<ChernVector> parse_class_list(std::string_view list, const VarietyDesc& x);

struct Viewport {
    Rational beta_min{-4};
    Rational beta_max{2};
    Rational alpha_max{3};
};

/// Deterministic SVG 1.1 document: half-plane, axes, one path per semicircle,
/// one line per vertical wall, witnesses as title elements.
std::string render_walls_svg(const std::vector<WallCircle>& walls, const Viewport& viewport);

/// Exit codes: 0 success, 2 usage or parse error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kuznum::cli
