#include "embcycle/log.hpp"

#include <cstdlib>
#include <iostream>

namespace embcycle::log {

namespace {

Level parse_level() {
    const char* env = std::getenv("EMBCYCLE_LOG_LEVEL");
    if (env == nullptr) return Level::warn;
    const std::string v(env);
    if (v == "error") return Level::error;
    if (v == "warn") return Level::warn;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    std::cerr << "[embcycle][warn] unknown EMBCYCLE_LOG_LEVEL '" << v << "', using warn\n";
    return Level::warn;
}

void emit(Level lvl, const char* tag, const std::string& msg) {
    if (static_cast<int>(lvl) > static_cast<int>(level())) return;
    std::cerr << "[embcycle][" << tag << "] " << msg << '\n';
}

}  // namespace

Level level() {
    static const Level lvl = parse_level();
    return lvl;
}

void error(const std::string& msg) { emit(Level::error, "error", msg); }
void warn(const std::string& msg) { emit(Level::warn, "warn", msg); }
void info(const std::string& msg) { emit(Level::info, "info", msg); }
void debug(const std::string& msg) { emit(Level::debug, "debug", msg); }

}  // namespace embcycle::log
