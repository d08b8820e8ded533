#include "recsizer/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace recsizer {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("REC_SIZER_LOG");
        if (!env) return LogLevel::Error;
        const std::string v(env);
        if (v == "2" || v == "debug") return LogLevel::Debug;
        if (v == "1" || v == "info") return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

void log_write(LogLevel level, const std::string& message) {
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const char* tag = level == LogLevel::Error ? "error" : level == LogLevel::Info ? "info" : "debug";
    std::cerr << "[" << tag << "] " << message << "\n";
}

} // namespace recsizer
