#pragma once

#include <stdexcept>
#include <string>

namespace dlra {

/// Operand shapes do not agree, or a size guard was exceeded.
class DimensionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed: non-finite values, iteration cap hit,
/// or an estimator that stopped being self-consistent.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Invalid experiment description (bad key, bad expression, bad combination).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dlra
