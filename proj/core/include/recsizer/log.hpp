#pragma once

#include <sstream>

namespace recsizer {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

/// Verbosity from REC_SIZER_LOG ("error"/"info"/"debug" or 0/1/2), read once.
LogLevel log_level();

void log_write(LogLevel level, const std::string& message);

} // namespace recsizer

#define REC_LOG_AT(level, expr)                                   \
    do {                                                          \
        if (static_cast<int>(level) <= static_cast<int>(::recsizer::log_level())) { \
            std::ostringstream rec_log_os;                        \
            rec_log_os << expr;                                   \
            ::recsizer::log_write(level, rec_log_os.str());       \
        }                                                         \
    } while (0)

#define REC_LOG_ERROR(expr) REC_LOG_AT(::recsizer::LogLevel::Error, expr)
#define REC_LOG_INFO(expr) REC_LOG_AT(::recsizer::LogLevel::Info, expr)
#define REC_LOG_DEBUG(expr) REC_LOG_AT(::recsizer::LogLevel::Debug, expr)
