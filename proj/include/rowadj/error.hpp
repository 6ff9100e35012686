#pragma once

#include <stdexcept>
#include <string>

namespace rowadj {

// Broad failure classes; the CLI maps each one to a distinct exit status.
enum class ErrorKind {
  parse,          // malformed input text or arguments
  structure,      // order-theoretic precondition violated
  missing_value,  // a function value needed for a computation is absent
  mismatch,       // a theorem result disagreed with its oracle
  algebra,        // dimension or singularity problems in the matrix kernel
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define ROWADJ_DEFINE_ERROR(Name, Kind)                                  \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  }

ROWADJ_DEFINE_ERROR(ParseError, parse);
ROWADJ_DEFINE_ERROR(DomainError, parse);

ROWADJ_DEFINE_ERROR(CycleError, structure);
ROWADJ_DEFINE_ERROR(DuplicateCoverError, structure);
ROWADJ_DEFINE_ERROR(UnknownElementError, structure);
ROWADJ_DEFINE_ERROR(BackendMismatchError, structure);
ROWADJ_DEFINE_ERROR(NoMeetError, structure);
ROWADJ_DEFINE_ERROR(NoJoinError, structure);
ROWADJ_DEFINE_ERROR(NotClosedError, structure);
ROWADJ_DEFINE_ERROR(OrderingError, structure);
ROWADJ_DEFINE_ERROR(InadmissibleClosureError, structure);

ROWADJ_DEFINE_ERROR(MissingValueError, missing_value);

ROWADJ_DEFINE_ERROR(TheoremMismatchError, mismatch);

ROWADJ_DEFINE_ERROR(DimensionError, algebra);
ROWADJ_DEFINE_ERROR(SingularError, algebra);

#undef ROWADJ_DEFINE_ERROR

// Raised by the theorem-side inverse when a diagonal Psi value vanishes.
class SingularPsiError : public Error {
 public:
  SingularPsiError(std::size_t index, const std::string& what)
      : Error(ErrorKind::algebra, what), index_(index) {}

  // 1-based row index i of the first vanishing Psi_{S,f_i}(x_i).
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace rowadj
