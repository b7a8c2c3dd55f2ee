#ifndef COOPNET_ERRORS_HPP
#define COOPNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coopnet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfEdgeError : Error {
  using Error::Error;
};
struct DuplicateEdgeError : Error {
  using Error::Error;
};
struct UnknownNodeError : Error {
  using Error::Error;
};
struct EmptyNetworkError : Error {
  using Error::Error;
};
struct TooFewTargetsError : Error {
  using Error::Error;
};
struct DegenerateDegreeError : Error {
  using Error::Error;
};
struct TooManyEdgesError : Error {
  using Error::Error;
};
struct SeriesTooShortError : Error {
  using Error::Error;
};
struct MismatchedGridsError : Error {
  using Error::Error;
};
struct InvalidCountsError : Error {
  using Error::Error;
};
struct TooFewSamplesError : Error {
  using Error::Error;
};
struct InvalidConfigError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace coopnet

#endif
