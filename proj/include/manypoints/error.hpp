/*
   Copyright 2026 The manypoints Authors

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

#ifndef MANYPOINTS_ERROR_HPP
#define MANYPOINTS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace manypoints {

/// Named domain errors. The name is what the CLI prints on stderr.
enum class Errc {
    NonPrime,
    EvenPrime,
    Overflow,
    InvalidDegree,
    InvalidElement,
    ZeroInverse,
    MismatchedSpecs,
    ZeroModulus,
    SingularLambda,
    ZeroTwist,
    NotPrimePower,
    NonDistinctRoots,
    EvenCharacteristic,
    BadTarget,
    UnsupportedField,
    BudgetExceeded,
    EmptySweep,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::EvenPrime: return "EvenPrime";
        case Errc::Overflow: return "Overflow";
        case Errc::InvalidDegree: return "InvalidDegree";
        case Errc::InvalidElement: return "InvalidElement";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::MismatchedSpecs: return "MismatchedSpecs";
        case Errc::ZeroModulus: return "ZeroModulus";
        case Errc::SingularLambda: return "SingularLambda";
        case Errc::ZeroTwist: return "ZeroTwist";
        case Errc::NotPrimePower: return "NotPrimePower";
        case Errc::NonDistinctRoots: return "NonDistinctRoots";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::BadTarget: return "BadTarget";
        case Errc::UnsupportedField: return "UnsupportedField";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::EmptySweep: return "EmptySweep";
    }
    return "Unknown";
}

class DomainError : public std::invalid_argument {
public:
    DomainError(Errc code, const std::string& what)
        : std::invalid_argument(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

}  // namespace manypoints

#endif  // MANYPOINTS_ERROR_HPP
