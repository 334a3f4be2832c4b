#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hrdeg::cli {

// key = value per line, '#' starts a comment, blank lines ignored.
// Keys are long option names without the leading dashes.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

ConfigEntries parse_config(const std::string& text);
ConfigEntries read_config_file(const std::string& path);

}  // namespace hrdeg::cli
