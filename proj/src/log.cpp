#include "qspectra/log.hpp"

#include <cstdlib>
#include <iostream>

namespace qspectra::log {

Level threshold() {
    static const Level cached = [] {
        const char* env = std::getenv("QSPECTRA_LOG");
        if (!env) return Level::Warn;
        const std::string v(env);
        if (v == "error") return Level::Error;
        if (v == "warn") return Level::Warn;
        if (v == "info") return Level::Info;
        if (v == "debug") return Level::Debug;
        return Level::Warn;
    }();
    return cached;
}

void write(Level level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(threshold())) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

} // namespace qspectra::log
