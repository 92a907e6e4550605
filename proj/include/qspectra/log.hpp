#ifndef QSPECTRA_LOG_HPP
#define QSPECTRA_LOG_HPP

#include <string>

namespace qspectra::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Threshold from QSPECTRA_LOG (error|warn|info|debug); default warn.
Level threshold();

void write(Level level, const std::string& msg);

inline void error(const std::string& msg) { write(Level::Error, msg); }
inline void warn(const std::string& msg) { write(Level::Warn, msg); }
inline void info(const std::string& msg) { write(Level::Info, msg); }
inline void debug(const std::string& msg) { write(Level::Debug, msg); }

} // namespace qspectra::log

#endif
