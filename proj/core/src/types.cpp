#include "maxmin/types.hpp"

namespace maxmin {

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

void require_dim(const Vec& v, Index expected, const char* name) {
  if (v.size() != expected) {
    throw UsageError(std::string(name) + ": expected dimension " +
                     std::to_string(expected) + ", got " +
                     std::to_string(v.size()));
  }
}

void require_nonnegative(const Vec& v, const char* name) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!(v[i] >= 0.0)) {
      throw UsageError(std::string(name) + ": coordinate " + std::to_string(i) +
                       " is negative or NaN");
    }
  }
}

void require_positive(const Vec& v, const char* name) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) {
      throw UsageError(std::string(name) + ": coordinate " + std::to_string(i) +
                       " is not strictly positive");
    }
  }
}

}  // namespace maxmin
