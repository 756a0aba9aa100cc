#ifndef RATSURF_ERROR_HPP
#define RATSURF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ratsurf {

enum class ErrorKind {
  Dimension,          // class lengths disagree with each other or with the surface
  Domain,             // operation precondition violated by the argument
  Invariant,          // internal consistency check failed
  SpecInconsistency,  // the surface data contradicts a fact the engine relies on
  CatalogIncomplete,  // an iteration exceeded its safety bound
  Refusal,            // oracle search space over the configured cap
  Schema              // malformed or unknown input fields
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

} // namespace ratsurf

#endif // RATSURF_ERROR_HPP
