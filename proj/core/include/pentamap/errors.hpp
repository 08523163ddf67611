#pragma once

#include <stdexcept>
#include <string>

namespace pentamap {

// Domain errors: the input asked for something outside the moduli space or
// outside an operation's region of validity. The CLI maps these to exit 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoPentagon : DomainError {
  explicit NoPentagon(const std::string& what) : DomainError(what) {}
};
struct OutsideRegion : DomainError {
  explicit OutsideRegion(const std::string& what) : DomainError(what) {}
};
struct OutsideModuli : DomainError {
  explicit OutsideModuli(const std::string& what) : DomainError(what) {}
};
struct TangentPole : DomainError {
  explicit TangentPole(const std::string& what) : DomainError(what) {}
};
struct PoleHit : DomainError {
  explicit PoleHit(const std::string& what) : DomainError(what) {}
};
struct RadicandVanished : DomainError {
  explicit RadicandVanished(const std::string& what) : DomainError(what) {}
};
struct LeftDomain : DomainError {
  explicit LeftDomain(const std::string& what) : DomainError(what) {}
};
struct SeedNotFixed : DomainError {
  explicit SeedNotFixed(const std::string& what) : DomainError(what) {}
};
struct LostLock : DomainError {
  explicit LostLock(const std::string& what) : DomainError(what) {}
};

// Internal failures (bugs, iteration blowups). CLI exit 1.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace pentamap
