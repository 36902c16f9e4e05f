#pragma once

#include <algorithm>

#include "tjl/stream.hpp"

// Position-by-position reference semantics for the stream algebra. Scans far
// enough past both periodic tails that missing witnesses cannot appear later.
namespace tjl::naive {

inline size_t horizon(const Upb& a, const Upb& b) {
  size_t p = std::max(a.prefix_size(), b.prefix_size());
  size_t q = a.loop_size() * b.loop_size();
  return p + 2 * q + 2;
}

inline bool until_at(const Upb& a, const Upb& b, size_t n) {
  size_t stop = n + horizon(a, b);
  for (size_t m = n; m <= stop; ++m) {
    if (b.at(m)) return true;
    if (!a.at(m)) return false;
  }
  return false;  // no fulfilling position within a full period: never
}

inline bool since_at(const Upb& a, const Upb& b, size_t n) {
  for (size_t m = n + 1; m-- > 0;) {
    if (b.at(m)) return true;
    if (!a.at(m)) return false;
  }
  return false;
}

inline bool box_at(const Upb& a, size_t n) {
  size_t stop = n + horizon(a, a);
  for (size_t m = n; m <= stop; ++m) {
    if (!a.at(m)) return false;
  }
  return true;
}

inline bool diamond_at(const Upb& a, size_t n) {
  size_t stop = n + horizon(a, a);
  for (size_t m = n; m <= stop; ++m) {
    if (a.at(m)) return true;
  }
  return false;
}

inline bool boxminus_at(const Upb& a, size_t n) {
  for (size_t m = 0; m <= n; ++m) {
    if (!a.at(m)) return false;
  }
  return true;
}

inline bool diamondminus_at(const Upb& a, size_t n) {
  for (size_t m = 0; m <= n; ++m) {
    if (a.at(m)) return true;
  }
  return false;
}

}  // namespace tjl::naive
