/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DTLSUM_ERRORS_HPP
#define DTLSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtlsum {

class DivisionByZero : public std::domain_error {
  public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Operands live over different variable sets.
class VarSetMismatch : public std::invalid_argument {
  public:
    explicit VarSetMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A matrix builder or formula was asked for a size it is not defined at.
class SizeRuleError : public std::invalid_argument {
  public:
    explicit SizeRuleError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dtlsum

#endif  // DTLSUM_ERRORS_HPP
