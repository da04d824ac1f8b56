#pragma once

#include <stdexcept>
#include <string>

namespace umbilic {

// Root of every error raised by the library. `code()` is the stable identifier
// surfaced through the C API.
class Error : public std::runtime_error {
 public:
  enum class Code {
    Parse = 1,
    Domain,
    NonFinite,
    ZeroOnCurve,
    UmbilicOnCurve,
    TangentZero,
    NoConvergence,
    Umbilic,
    EquiDiagonal,
    InvalidArgument,
    Io,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

#define UMBILIC_DEFINE_ERROR(Name, CodeValue)                                 \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(Code::CodeValue, what) {}  \
  };

UMBILIC_DEFINE_ERROR(ParseError, Parse)
UMBILIC_DEFINE_ERROR(DomainError, Domain)
UMBILIC_DEFINE_ERROR(NonFiniteError, NonFinite)
UMBILIC_DEFINE_ERROR(ZeroOnCurveError, ZeroOnCurve)
UMBILIC_DEFINE_ERROR(UmbilicOnCurveError, UmbilicOnCurve)
UMBILIC_DEFINE_ERROR(TangentZeroError, TangentZero)
UMBILIC_DEFINE_ERROR(NoConvergence, NoConvergence)
UMBILIC_DEFINE_ERROR(UmbilicError, Umbilic)
UMBILIC_DEFINE_ERROR(EquiDiagonalError, EquiDiagonal)
UMBILIC_DEFINE_ERROR(InvalidArgument, InvalidArgument)
UMBILIC_DEFINE_ERROR(IoError, Io)

#undef UMBILIC_DEFINE_ERROR

}  // namespace umbilic
