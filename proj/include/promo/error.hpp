#pragma once

#include <stdexcept>
#include <string>

namespace promo {

/// Invalid argument or broken invariant in library input.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Training cannot proceed on the given dataset (e.g. a single class).
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read, written, or decoded.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace promo
