#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cogmine/codec.hpp"
#include "test_support.hpp"

using namespace cogmine;
using cogtest::throws_with;

namespace {

const Rational kStates[3] = {Rational(0), Rational(1, 2), Rational(1)};

CognitionControlSequence sequence_of(std::vector<std::vector<Rational>> rows) {
  CognitionControlSequence s;
  for (auto& row : rows) s.ccms.push_back(CCM{std::move(row)});
  return s;
}

}  // namespace

TEST_CASE("quantize maps the open interval to 1/2") {
  CHECK(quantize(Rational(0)) == Rational(0));
  CHECK(quantize(Rational(1)) == Rational(1));
  CHECK(quantize(Rational(3, 5)) == Rational(1, 2));
  CHECK(quantize(Rational(999999, 1000000)) == Rational(1, 2));
  CHECK(quantize(Rational(1, 1000000)) == Rational(1, 2));
  CHECK(throws_with(Errc::OutOfRange, [] { quantize(Rational(-1, 2)); }));
  CHECK(throws_with(Errc::OutOfRange, [] { quantize(Rational(3, 2)); }));
}

TEST_CASE("encode places states at 10^5, 10^3, 10^1") {
  CHECK(encode_ccm({Rational(1, 2), Rational(1, 2), Rational(0)}) == 50500);
  CHECK(encode_ccm({Rational(0), Rational(0), Rational(0)}) == 0);
  CHECK(encode_ccm({Rational(1), Rational(1), Rational(1)}) == 101010);
  CHECK(encode_ccm({Rational(1, 2)}) == 50000);
  CHECK(encode_ccm({}) == 0);
  CHECK(throws_with(Errc::TooManyComponents, [] {
    encode_ccm({Rational(0), Rational(0), Rational(0), Rational(0)});
  }));
}

TEST_CASE("decode inverts encode and validates digit pairs") {
  CHECK(decode_ccm(50500, 3) == QuantizedCCM{Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK(decode_ccm(0, 3) == QuantizedCCM{Rational(0), Rational(0), Rational(0)});
  CHECK(decode_ccm(50500, 1) == QuantizedCCM{Rational(1, 2)});
  CHECK(throws_with(Errc::InvalidCodeword, [] { decode_ccm(123456, 3); }));
  CHECK(throws_with(Errc::InvalidCodeword, [] { decode_ccm(-1, 3); }));
  CHECK(throws_with(Errc::InvalidCodeword, [] { decode_ccm(1000000, 3); }));
  CHECK(throws_with(Errc::OutOfRange, [] { decode_ccm(0, 0); }));
  CHECK(throws_with(Errc::OutOfRange, [] { decode_ccm(0, 4); }));
}

TEST_CASE("all 27 quantized triples round trip; codewords stay in the alphabet") {
  std::set<EncodedCCM> codes;
  for (const Rational& a : kStates) {
    for (const Rational& b : kStates) {
      for (const Rational& c : kStates) {
        const QuantizedCCM q{a, b, c};
        const EncodedCCM code = encode_ccm(q);
        CHECK(decode_ccm(code, 3) == q);
        codes.insert(code);

        const std::int64_t pairs[3] = {code / 10000, (code / 100) % 100, code % 100};
        for (std::int64_t pair : pairs) {
          CHECK((pair == 0 || pair == 5 || pair == 10));
        }
        // Decoding re-encodes to the same codeword.
        CHECK(encode_ccm(decode_ccm(code, 3)) == code);
      }
    }
  }
  CHECK(codes.size() == 27);  // injective on fixed arity
}

TEST_CASE("encode_sequence quantizes then collapses duplicates") {
  const auto s_cog = sequence_of({{Rational(0), Rational(0), Rational(0)},
                                  {Rational(1, 6), Rational(0), Rational(0)},
                                  {Rational(1, 2), Rational(0), Rational(0)}});
  CHECK(encode_sequence(s_cog) == std::vector<EncodedCCM>{0, 50000});
}

TEST_CASE("encode_sequence edge cases") {
  CHECK(encode_sequence(sequence_of({})).empty());

  const auto complete = sequence_of({{Rational(1, 2), Rational(0), Rational(0)},
                                     {Rational(1), Rational(1), Rational(1)}});
  const auto codes = encode_sequence(complete);
  CHECK(codes.back() == 101010);

  // No consecutive duplicates survive; collapsing is idempotent.
  for (std::size_t i = 1; i < codes.size(); ++i) CHECK(codes[i] != codes[i - 1]);
}

TEST_CASE("decode_sequence is elementwise") {
  const std::vector<QuantizedCCM> decoded = decode_sequence({0, 50000, 101010}, 3);
  REQUIRE(decoded.size() == 3);
  CHECK(decoded[0] == QuantizedCCM{Rational(0), Rational(0), Rational(0)});
  CHECK(decoded[1] == QuantizedCCM{Rational(1, 2), Rational(0), Rational(0)});
  CHECK(decoded[2] == QuantizedCCM{Rational(1), Rational(1), Rational(1)});
  CHECK(throws_with(Errc::InvalidCodeword, [] { decode_sequence({42}, 3); }));
}

TEST_CASE("pipeline values quantize as in the worked example") {
  // The (1/2, 3/5, 0) CCM encodes to 50500: both nonzero rates are partial.
  const auto s_cog = sequence_of({{Rational(1, 2), Rational(3, 5), Rational(0)}});
  CHECK(encode_sequence(s_cog) == std::vector<EncodedCCM>{50500});
}
