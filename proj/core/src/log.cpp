#include "netfuzz/log.hpp"

#include <cstdlib>
#include <iostream>

namespace netfuzz::log {

int level() {
  static const int lvl = [] {
    const char* env = std::getenv("NETFUZZ_LOG");
    if (!env) return 0;
    return std::atoi(env);
  }();
  return lvl;
}

void warn(const std::string& message) { std::cerr << "[netfuzz] warning: " << message << "\n"; }

void info(const std::string& message) {
  if (level() >= 1) std::cerr << "[netfuzz] " << message << "\n";
}

void debug(const std::string& message) {
  if (level() >= 2) std::cerr << "[netfuzz] debug: " << message << "\n";
}

}  // namespace netfuzz::log
