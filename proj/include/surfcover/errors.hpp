#ifndef SURFCOVER_ERRORS_HPP
#define SURFCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace surfcover {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SURFCOVER_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

SURFCOVER_DEFINE_ERROR(DivisionByZero);
SURFCOVER_DEFINE_ERROR(VariableMismatch);
SURFCOVER_DEFINE_ERROR(NotSquarefree);
SURFCOVER_DEFINE_ERROR(InternalLimit);
SURFCOVER_DEFINE_ERROR(NotOnCurve);
SURFCOVER_DEFINE_ERROR(NonSplitTangentCone);
SURFCOVER_DEFINE_ERROR(DepthCapExceeded);
SURFCOVER_DEFINE_ERROR(DirectionNotInTangentCone);
SURFCOVER_DEFINE_ERROR(ConfigMismatch);
SURFCOVER_DEFINE_ERROR(NotEven);
SURFCOVER_DEFINE_ERROR(EmptySystem);
SURFCOVER_DEFINE_ERROR(CatalogInsufficient);
SURFCOVER_DEFINE_ERROR(BranchContractViolated);
SURFCOVER_DEFINE_ERROR(InconsistentDeclaration);
SURFCOVER_DEFINE_ERROR(DegenerateChoice);
SURFCOVER_DEFINE_ERROR(CertificateInconclusive);
SURFCOVER_DEFINE_ERROR(FixtureError);

#undef SURFCOVER_DEFINE_ERROR

/// Parse failure with the byte offset and a description of what was expected.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : Error("ParseError at " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace surfcover

#endif  // SURFCOVER_ERRORS_HPP
