/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DARBOUX_ERROR(Name)                      \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string &what)       \
        : Error(std::string(#Name ": ") + what) {} \
  }

DARBOUX_ERROR(ParameterError);
DARBOUX_ERROR(ParseError);
DARBOUX_ERROR(FieldMismatch);
DARBOUX_ERROR(FieldExtensionNeeded);
DARBOUX_ERROR(CompositionDivergence);
DARBOUX_ERROR(DegeneratePathError);
DARBOUX_ERROR(UnsupportedSupport);
DARBOUX_ERROR(ClassificationError);
DARBOUX_ERROR(InconsistentBranching);
DARBOUX_ERROR(BasePointError);
DARBOUX_ERROR(DivisionByZero);

#undef DARBOUX_ERROR

}  // namespace darboux
