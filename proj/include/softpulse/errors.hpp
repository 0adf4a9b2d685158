#pragma once

#include <stdexcept>

namespace softpulse {

struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnitary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadTiming : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroAlpha : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroDetuning : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroAmplitude : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoValidN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadChannel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace softpulse
