#include "ilseq/record_io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

namespace ilseq {

namespace {

bool blank_or_separators(std::string_view line) {
  return line.find_first_not_of(" \t\r,") == std::string_view::npos;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_integer(std::string_view value, const std::string& key, std::size_t lineno) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw TextParseError("line " + std::to_string(lineno + 1) + ": bad integer for key '" + key +
                             "'",
                         lineno);
  return out;
}

}  // namespace

BinarySequence parse_sequence_text(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      continue;
    } else {
      throw TextParseError(
          "invalid symbol '" + std::string(1, c) + "' at position " + std::to_string(pos), pos);
    }
  }
  if (bits.empty()) throw TextParseError("empty sequence", 0);
  return BinarySequence(std::move(bits));
}

SequenceRecord make_record(const ConstructionParams& params, const DhlFamily& family,
                           BinarySequence u) {
  SequenceRecord rec;
  SequenceRecord::Meta meta;
  meta.p = params.prime.p;
  meta.alpha = params.alpha;
  meta.x = family.x;
  meta.y = family.y;
  meta.d = params.d;
  meta.tuple_id = params.tuple_id;
  meta.b = params.b;
  rec.meta = meta;
  rec.bits = std::move(u);
  return rec;
}

std::string emit_record(const SequenceRecord& record) {
  std::ostringstream out;
  if (record.meta) {
    const auto& m = *record.meta;
    out << "p=" << m.p << "\n"
        << "alpha=" << m.alpha << "\n"
        << "x=" << m.x << "\n"
        << "y=" << m.y << "\n"
        << "d=" << m.d << "\n"
        << "tuple=" << m.tuple_id << "\n"
        << "b=" << m.b[0] << m.b[1] << m.b[2] << m.b[3] << "\n";
  }
  out << "period=" << record.bits.period() << "\n";
  out << "bits=";
  for (std::uint8_t bit : record.bits.bits()) out << static_cast<int>(bit);
  out << "\n";
  return out.str();
}

SequenceRecord parse_record(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> kv;  // key -> (value, line)
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                             : end - start);
    start = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    line = strip(line);
    if (!line.empty() && line.front() != '#') {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos)
        throw TextParseError("line " + std::to_string(lineno + 1) + ": expected key=value",
                             lineno);
      const std::string key(strip(line.substr(0, eq)));
      const std::string value(strip(line.substr(eq + 1)));
      if (kv.count(key))
        throw TextParseError("line " + std::to_string(lineno + 1) + ": duplicate key '" + key +
                                 "'",
                             lineno);
      kv[key] = {value, lineno};
    }
    ++lineno;
  }

  auto lookup = [&kv](const char* key) -> const std::pair<std::string, std::size_t>* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  const auto* bits_kv = lookup("bits");
  const auto* period_kv = lookup("period");
  if (!bits_kv || !period_kv)
    throw TextParseError("record needs both 'period' and 'bits' keys", 0);

  SequenceRecord rec;
  rec.bits = parse_sequence_text(bits_kv->first);
  const auto period = parse_integer<std::uint64_t>(period_kv->first, "period", period_kv->second);
  if (period != rec.bits.period())
    throw TextParseError("declared period " + std::to_string(period) + " does not match " +
                             std::to_string(rec.bits.period()) + " bits",
                         period_kv->second);

  const char* meta_keys[] = {"p", "alpha", "x", "y", "d", "tuple", "b"};
  std::size_t present = 0;
  for (const char* key : meta_keys)
    if (lookup(key)) ++present;
  if (present == 0) return rec;
  if (present != std::size(meta_keys))
    throw TextParseError("record has a partial construction header", 0);

  SequenceRecord::Meta meta;
  meta.p = parse_integer<std::uint64_t>(lookup("p")->first, "p", lookup("p")->second);
  meta.alpha =
      parse_integer<std::uint64_t>(lookup("alpha")->first, "alpha", lookup("alpha")->second);
  meta.x = parse_integer<std::int64_t>(lookup("x")->first, "x", lookup("x")->second);
  meta.y = parse_integer<int>(lookup("y")->first, "y", lookup("y")->second);
  meta.d = parse_integer<std::uint64_t>(lookup("d")->first, "d", lookup("d")->second);
  meta.tuple_id =
      parse_integer<int>(lookup("tuple")->first, "tuple", lookup("tuple")->second);
  const auto& [b_str, b_line] = *lookup("b");
  if (b_str.size() != 4 || b_str.find_first_not_of("01") != std::string::npos)
    throw TextParseError("line " + std::to_string(b_line + 1) + ": b must be 4 bits", b_line);
  for (std::size_t k = 0; k < 4; ++k) meta.b[k] = b_str[k] - '0';
  rec.meta = meta;
  return rec;
}

std::string emit_profile(const CorrelationProfile& profile) {
  std::ostringstream out;
  out << "tau,value\n";
  for (std::size_t tau = 0; tau < profile.values.size(); ++tau)
    out << tau << "," << profile.values[tau] << "\n";
  return out.str();
}

std::vector<BinarySequence> read_sequences(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find('=') != std::string::npos) return {parse_record(text).bits};

  std::vector<BinarySequence> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (blank_or_separators(line) || line.front() == '#') continue;
    try {
      out.push_back(parse_sequence_text(line));
    } catch (const TextParseError& e) {
      throw TextParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position);
    }
  }
  if (out.empty()) throw TextParseError("no sequences in input", 0);
  return out;
}

}  // namespace ilseq
