#pragma once

#include <string>

namespace netfuzz::log {

/// Verbosity from NETFUZZ_LOG: 0 quiet (default warnings only), 1 info, 2 debug.
int level();

void warn(const std::string& message);
void info(const std::string& message);
void debug(const std::string& message);

}  // namespace netfuzz::log
