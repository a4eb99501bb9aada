#pragma once

#include <cstdint>
#include <vector>

#include "cogmine/coverage.hpp"
#include "cogmine/rational.hpp"

namespace cogmine {

// Coverage states quantized to {0, 1/2, 1} = untouched / partial /
// complete. At most 3 components: the positional code has digit pairs for
// j in {1,2,3} only.
using QuantizedCCM = std::vector<Rational>;

// Integer codeword: sum of state_j * 10^(7-2j). Zero-padded to six decimal
// digits, every digit pair is 00, 05, or 10; the maximum is 101010.
using EncodedCCM = std::int64_t;

// Exact case analysis: 0 -> 0, 1 -> 1, anything strictly between -> 1/2.
Rational quantize(const Rational& x);

QuantizedCCM quantize_ccm(const CCM& ccm);

EncodedCCM encode_ccm(const QuantizedCCM& states);        // Errc::TooManyComponents
QuantizedCCM decode_ccm(EncodedCCM value, int arity);     // Errc::InvalidCodeword

// Quantizes and encodes every CCM, then collapses consecutive duplicate
// codewords: the mining alphabet of stage changes.
std::vector<EncodedCCM> encode_sequence(const CognitionControlSequence& s_cog);

std::vector<QuantizedCCM> decode_sequence(const std::vector<EncodedCCM>& codes, int arity);

}  // namespace cogmine
