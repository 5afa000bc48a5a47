#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xmm {

// Error taxonomy. Everything derives from std::runtime_error so callers can
// catch broadly; tests catch the specific types.
struct DimensionError : std::runtime_error { using std::runtime_error::runtime_error; };
struct DomainError    : std::runtime_error { using std::runtime_error::runtime_error; };
struct IndexError     : std::runtime_error { using std::runtime_error::runtime_error; };
struct FormatError    : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConfigError    : std::runtime_error { using std::runtime_error::runtime_error; };
struct InputError     : std::runtime_error { using std::runtime_error::runtime_error; };
struct NumericError   : std::runtime_error { using std::runtime_error::runtime_error; };
struct TrainingError  : std::runtime_error { using std::runtime_error::runtime_error; };
struct ContractError  : std::runtime_error { using std::runtime_error::runtime_error; };
struct IoError        : std::runtime_error { using std::runtime_error::runtime_error; };

using f32 = float;
using f64 = double;

}  // namespace xmm
