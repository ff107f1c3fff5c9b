#pragma once

#include <stdexcept>
#include <string>

namespace muwm {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Codeword enumeration over a code whose dimension exceeds the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A linear program with no finite optimum.
class Unbounded : public Error {
public:
    using Error::Error;
};

/// Malformed input text (matrix files, manifests, SDP files).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace muwm
