#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yokotl {

/// Raised when a computation exceeds a configured resource bound.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Entries a trace engine may memoize before its memo is flushed.
/// Read once from YOKOTL_MEMO_LIMIT; 0 (the default) means unbounded.
std::size_t memo_limit();

/// Maximum skein recursion depth, from YOKOTL_DEPTH_LIMIT (default 100000).
int depth_limit();

}  // namespace yokotl
