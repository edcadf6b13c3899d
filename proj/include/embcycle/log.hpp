#pragma once

#include <string>

namespace embcycle::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Level is read once from EMBCYCLE_LOG_LEVEL (error|warn|info|debug); default warn.
Level level();

void error(const std::string& msg);
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace embcycle::log
