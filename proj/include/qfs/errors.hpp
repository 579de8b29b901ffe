#pragma once

#include <stdexcept>
#include <string>

namespace qfs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// moebius_core
class ParabolicOrIdentity : public Error { using Error::Error; };
class NotLoxodromic : public Error { using Error::Error; };
class SharedEndpoint : public Error { using Error::Error; };
class DegenerateGeodesic : public Error { using Error::Error; };

// hexagon / pants
class DegenerateSide : public Error { using Error::Error; };
class ReduciblePants : public Error { using Error::Error; };

// surface assembly
class MalformedGraph : public Error { using Error::Error; };
class DegenerateFN : public Error { using Error::Error; };
class BranchFailure : public Error { using Error::Error; };
class UnknownGenerator : public Error { using Error::Error; };

// cocycles
class BaseMismatch : public Error { using Error::Error; };

// schwarzian
class CriticalPoint : public Error { using Error::Error; };

/// Configuration errors carry a JSON-pointer path to the offending field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class SchemaError : public ConfigError { using ConfigError::ConfigError; };
class CountMismatch : public ConfigError { using ConfigError::ConfigError; };
class DanglingCuff : public ConfigError { using ConfigError::ConfigError; };

}  // namespace qfs
