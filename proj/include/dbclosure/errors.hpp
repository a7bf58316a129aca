#ifndef DBCLOSURE_ERRORS_HPP
#define DBCLOSURE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dbclosure {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define DBCLOSURE_ERROR(Name)                                                  \
    class Name : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    }

DBCLOSURE_ERROR(IndexOutOfRange);
DBCLOSURE_ERROR(SelfLoop);
DBCLOSURE_ERROR(Disconnected);
DBCLOSURE_ERROR(SizeMismatch);
DBCLOSURE_ERROR(ParseError);
DBCLOSURE_ERROR(InvalidArgument);

// tree families
DBCLOSURE_ERROR(EmptySpec);
DBCLOSURE_ERROR(ParameterTooSmall);
DBCLOSURE_ERROR(NotATree);
DBCLOSURE_ERROR(UnsupportedFamily);

// exact search
DBCLOSURE_ERROR(PruneModeUnjustified);
DBCLOSURE_ERROR(TooLarge);
DBCLOSURE_ERROR(InfeasibleDegree);

#undef DBCLOSURE_ERROR

} // namespace dbclosure

#endif
