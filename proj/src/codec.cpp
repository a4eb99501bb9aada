#include "cogmine/codec.hpp"

namespace cogmine {

namespace {

// Weight of position j (1-based) is 10^(7-2j): 100000, 1000, 10.
constexpr std::int64_t kPositionWeight[3] = {100000, 1000, 10};

}  // namespace

Rational quantize(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw Error(Errc::OutOfRange, "coverage rate outside [0, 1]");
  }
  if (x == Rational(0)) return Rational(0);
  if (x == Rational(1)) return Rational(1);
  return Rational(1, 2);
}

QuantizedCCM quantize_ccm(const CCM& ccm) {
  QuantizedCCM states;
  states.reserve(ccm.values.size());
  for (const Rational& v : ccm.values) states.push_back(quantize(v));
  return states;
}

EncodedCCM encode_ccm(const QuantizedCCM& states) {
  if (states.size() > 3) {
    throw Error(Errc::TooManyComponents,
                "positional encoding supports at most 3 components, got " +
                    std::to_string(states.size()));
  }
  std::int64_t value = 0;
  for (std::size_t j = 0; j < states.size(); ++j) {
    // state * 10^(7-2j) is integral for states in {0, 1/2, 1}.
    const Rational contribution = states[j] * Rational(kPositionWeight[j]);
    value += contribution.numerator() / contribution.denominator();
  }
  return value;
}

QuantizedCCM decode_ccm(EncodedCCM value, int arity) {
  if (arity < 1 || arity > 3) {
    throw Error(Errc::OutOfRange, "arity must be in [1, 3]");
  }
  if (value < 0 || value > 999999) {
    throw Error(Errc::InvalidCodeword, "codeword out of range: " + std::to_string(value));
  }
  // Digit pairs of the six-digit zero-padded rendering, high to low.
  const std::int64_t pairs[3] = {value / 10000, (value / 100) % 100, value % 100};
  QuantizedCCM states;
  for (int j = 0; j < 3; ++j) {
    if (pairs[j] != 0 && pairs[j] != 5 && pairs[j] != 10) {
      throw Error(Errc::InvalidCodeword,
                  "digit pair " + std::to_string(pairs[j]) + " in codeword " +
                      std::to_string(value));
    }
    if (j < arity) states.emplace_back(pairs[j], 10);
  }
  return states;
}

std::vector<EncodedCCM> encode_sequence(const CognitionControlSequence& s_cog) {
  std::vector<EncodedCCM> codes;
  codes.reserve(s_cog.ccms.size());
  for (const CCM& ccm : s_cog.ccms) {
    const EncodedCCM code = encode_ccm(quantize_ccm(ccm));
    if (codes.empty() || codes.back() != code) codes.push_back(code);
  }
  return codes;
}

std::vector<QuantizedCCM> decode_sequence(const std::vector<EncodedCCM>& codes, int arity) {
  std::vector<QuantizedCCM> result;
  result.reserve(codes.size());
  for (EncodedCCM code : codes) result.push_back(decode_ccm(code, arity));
  return result;
}

}  // namespace cogmine
