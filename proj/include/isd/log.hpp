#pragma once

#include <string_view>

namespace isd::log {

enum class Level { Debug = 0, Info = 1, Warning = 2, Silent = 3 };

void set_level(Level level);
Level level();

void debug(std::string_view message);
void info(std::string_view message);
void warning(std::string_view message);

} // namespace isd::log
