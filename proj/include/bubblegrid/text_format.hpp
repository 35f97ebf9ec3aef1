#pragma once

#include <string>
#include <string_view>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

/// Contents of a configuration file: a beta header followed by one
/// "x y A|B" line per point. '#' starts a comment.
struct ConfigFile {
    Beta beta = Beta::exact(1, 2);
    Configuration config;
};

/// Throws ParseError on malformed lines, a missing header or duplicate
/// coordinates.
ConfigFile parse_config(std::string_view text);
ConfigFile read_config_file(const std::string& path);

/// Points are written in the configuration's (x, y) order.
std::string write_config(const Beta& beta, const Configuration& config);
void write_config_file(const std::string& path, const Beta& beta, const Configuration& config);

}  // namespace bubblegrid
