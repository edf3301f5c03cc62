#pragma once

#include <stdexcept>
#include <string>

namespace pih {

// Invalid configuration or parameter values (bad ranges, unknown keys, missing paths).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor shape / dimension mismatches.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation produced non-finite values.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse: mixing noise levels, decoding a noised latent, mutating frozen parameters.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Toy training diverged.
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pih
