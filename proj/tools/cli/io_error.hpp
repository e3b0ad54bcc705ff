#pragma once

#include "wwmtc/errors.hpp"

namespace wwmtc::cli {

/// Malformed or unreadable input file, bad flag value, or unwritable output.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace wwmtc::cli
