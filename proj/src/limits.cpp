#include "yokotl/limits.hpp"

#include <cstdlib>
#include <string>

namespace yokotl {

namespace {

long read_env(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long out = std::strtol(v, &end, 10);
  if (*end != '\0' || out < 0) throw std::invalid_argument(std::string(name) + " must be a nonnegative integer");
  return out;
}

}  // namespace

std::size_t memo_limit() {
  static const std::size_t limit = static_cast<std::size_t>(read_env("YOKOTL_MEMO_LIMIT", 0));
  return limit;
}

int depth_limit() {
  static const int limit = static_cast<int>(read_env("YOKOTL_DEPTH_LIMIT", 100000));
  return limit;
}

}  // namespace yokotl
