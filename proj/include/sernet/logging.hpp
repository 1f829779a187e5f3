#ifndef SERNET_LOGGING_HPP
#define SERNET_LOGGING_HPP

#include <string>

namespace sernet {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Silent = 3 };

// Process-wide minimum level. Tests lower it to Silent to keep output clean.
void set_log_level(LogLevel level);
LogLevel log_level();

void log_debug(const std::string& msg);
void log_info(const std::string& msg);
void log_warn(const std::string& msg);

} // namespace sernet

#endif
