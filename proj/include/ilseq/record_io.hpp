#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ilseq/correlation.hpp"
#include "ilseq/dhl.hpp"
#include "ilseq/interleave.hpp"
#include "ilseq/sequence.hpp"

namespace ilseq {

struct TextParseError : std::runtime_error {
  TextParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position = 0;
};

// One run of 0/1 symbols; commas, blanks and tabs are separators. Anything
// else raises TextParseError carrying the 0-based offending position.
BinarySequence parse_sequence_text(std::string_view text);

// Self-describing sequence document: construction metadata plus the bits, or
// bare bits for sequences that came from elsewhere.
struct SequenceRecord {
  struct Meta {
    std::uint64_t p = 0;
    std::uint64_t alpha = 0;
    std::int64_t x = 0;
    int y = 0;
    std::uint64_t d = 0;
    int tuple_id = 0;
    std::array<int, 4> b{};
  };
  std::optional<Meta> meta;
  BinarySequence bits;
};

SequenceRecord make_record(const ConstructionParams& params, const DhlFamily& family,
                           BinarySequence u);

// key=value lines in fixed order (p, alpha, x, y, d, tuple, b, period, bits);
// byte-stable, so emit(parse(emit(r))) == emit(r).
std::string emit_record(const SequenceRecord& record);
SequenceRecord parse_record(std::string_view text);

// CSV profile: header "tau,value", one row per shift.
std::string emit_profile(const CorrelationProfile& profile);

// Sequences from an input document. A document containing '=' is parsed as a
// record; otherwise each non-blank line is one bare 0/1 sequence. Lines
// starting with '#' are skipped.
std::vector<BinarySequence> read_sequences(std::istream& in);

}  // namespace ilseq
