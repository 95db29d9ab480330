#include "isd/log.hpp"

#include <atomic>
#include <iostream>

namespace isd::log {

namespace {
std::atomic<Level> current{Level::Info};

void emit(Level lvl, const char* tag, std::string_view message) {
    if (lvl >= current.load(std::memory_order_relaxed)) {
        std::cerr << "[" << tag << "] " << message << '\n';
    }
}
} // namespace

void set_level(Level level) { current.store(level, std::memory_order_relaxed); }
Level level() { return current.load(std::memory_order_relaxed); }

void debug(std::string_view message) { emit(Level::Debug, "debug", message); }
void info(std::string_view message) { emit(Level::Info, "info", message); }
void warning(std::string_view message) { emit(Level::Warning, "warn", message); }

} // namespace isd::log
