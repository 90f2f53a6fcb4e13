#include "ilseq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ilseq/correlation.hpp"
#include "ilseq/dhl.hpp"
#include "ilseq/interleave.hpp"
#include "ilseq/number_theory.hpp"
#include "ilseq/record_io.hpp"
#include "ilseq/sequence.hpp"

namespace ilseq {

namespace {

std::array<int, 4> parse_b_string(const std::string& s) {
  if (s.size() != 4 || s.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("--b must be 4 bits, e.g. 0101");
  return {s[0] - '0', s[1] - '0', s[2] - '0', s[3] - '0'};
}

std::string read_file(const std::string& path, std::vector<BinarySequence>& out) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  out = read_sequences(in);
  return path;
}

std::string classification_line(const OptimalityClass& cls) {
  std::string line(to_string(cls.tag));
  if (!cls.optimal() && !cls.note.empty()) line += ": " + cls.note;
  return line;
}

int cmd_search(std::uint64_t max_p, std::ostream& out) {
  out << "p,f,x\n";
  // Valid primes all have p - 4 a perfect square with odd root, so sweeping
  // odd roots r and testing p = r^2 + 4 enumerates every candidate.
  using u128 = unsigned __int128;
  for (std::uint64_t r = 1; u128(r) * r + 4 <= max_p; r += 2) {
    const std::uint64_t p = r * r + 4;
    const DhlPrimeCheck chk = validate_dhl_prime(p);
    if (chk.ok()) out << p << "," << chk.prime->f << "," << chk.prime->x << "\n";
  }
  return kExitOk;
}

int cmd_generate(std::uint64_t p, std::optional<std::uint64_t> alpha, int tuple_id,
                 const std::string& b_str, std::ostream& out) {
  const DhlFamily family = build_family(p, alpha);
  const ConstructionParams params = make_params(family, tuple_id, parse_b_string(b_str));
  BinarySequence u = construct(params, family);
  out << emit_record(make_record(params, family, std::move(u)));
  return kExitOk;
}

int cmd_profile(const std::string& path, std::ostream& out) {
  std::vector<BinarySequence> seqs;
  read_file(path, seqs);
  bool first = true;
  for (const BinarySequence& a : seqs) {
    if (!first) out << "\n";
    first = false;
    const CorrelationProfile prof = autocorrelation_profile(a);
    out << emit_profile(prof);
    out << "# classification=" << classification_line(classify(prof)) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  std::vector<BinarySequence> seqs;
  read_file(path, seqs);
  bool all_optimal = true;
  for (const BinarySequence& a : seqs) {
    const OptimalityClass cls = classify(autocorrelation_profile(a));
    out << "period=" << a.period() << " " << classification_line(cls) << "\n";
    if (!cls.optimal()) all_optimal = false;
  }
  return all_optimal ? kExitOk : kExitVerifyFailed;
}

const char* class_label(int cls) {
  switch (cls) {
    case kZeroColumn:
      return "zero";
    case 0:
      return "D0";
    case 1:
      return "D1";
    case 2:
      return "D2";
    case 3:
      return "D3";
  }
  return "?";
}

int cmd_table(std::uint64_t p, std::optional<std::uint64_t> alpha, std::ostream& out) {
  const DhlFamily family = build_family(p, alpha);
  const CorrelationTableReport rep = verify_correlation_table(family);
  out << "i,j,class,expected,computed,match\n";
  std::size_t matched = 0;
  for (const CorrelationTableRow& row : rep.rows) {
    out << "s" << row.i << ",s" << row.j << "," << class_label(row.cls) << "," << row.expected
        << ",";
    if (row.computed)
      out << *row.computed;
    else
      out << "-";
    out << "," << (row.match ? "ok" : "FAIL") << "\n";
    if (row.match) ++matched;
  }
  out << "# matched " << matched << "/" << rep.rows.size() << " entries\n";
  return rep.all_match() ? kExitOk : kExitVerifyFailed;
}

int cmd_example1(std::ostream& out) {
  int failures = 0;
  auto check = [&out, &failures](bool ok, const std::string& what) {
    out << (ok ? "ok - " : "FAIL - ") << what << "\n";
    if (!ok) ++failures;
  };

  const DhlFamily family = build_family(29, 2);

  const std::vector<std::uint64_t> d0{1, 7, 16, 20, 23, 24, 25};
  const std::vector<std::uint64_t> d1{2, 3, 11, 14, 17, 19, 21};
  const std::vector<std::uint64_t> d2{4, 5, 6, 9, 13, 22, 28};
  const std::vector<std::uint64_t> d3{8, 10, 12, 15, 18, 26, 27};
  check(family.classes.members(0) == d0 && family.classes.members(1) == d1 &&
            family.classes.members(2) == d2 && family.classes.members(3) == d3,
        "cyclotomic classes of 29 with generator 2 match the reference sets");

  check(family.prime.f == 7 && family.prime.x == 5, "p = 29 gives f = 7 and x = 5");
  check(family.x == 5 && family.y == -1, "resolved decomposition is 29 = 5^2 + 4(-1)^2");

  const std::uint64_t d = compute_d(29);
  check(d == 22, "quarter shift d = 22 satisfies 4d = 1 (mod 29)");

  const ConstructionParams params = make_params(family, 0, {0, 0, 0, 0});
  const BinarySequence u = construct(params, family);
  check(u.period() == 116, "constructed sequence has period 116");

  const CorrelationProfile prof = autocorrelation_profile(u);
  const OptimalityClass cls = classify(prof);
  check(cls.tag == OptimalityTag::OptimalMagnitude4,
        "out-of-phase autocorrelation lies in {0, +4, -4} with both signs attained");

  std::size_t zeros = 0;
  for (std::size_t tau = 1; tau < prof.values.size(); ++tau)
    if (prof.values[tau] == 0) ++zeros;
  check(zeros == 28, "exactly 28 shifts have autocorrelation 0");

  std::vector<std::size_t> plus4_even;
  for (std::size_t tau = 2; tau < prof.values.size(); tau += 4)
    if (prof.values[tau] == 4) plus4_even.push_back(tau);
  check(plus4_even.size() == 1 && plus4_even.front() == 58,
        "the single +4 among shifts = 2 (mod 4) sits at shift 58");

  const StructureCheck structure = structure_check(prof, params, family);
  check(structure.ok, "profile matches the predicted shift-by-shift shape");

  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"binary sequences of period 4p with out-of-phase autocorrelation in {0, +4, -4},"
               " built by interleaving shifted Ding-Helleseth-Lam sequences"};
  app.name("ilseq");
  app.require_subcommand(1);

  std::uint64_t max_p = 0;
  CLI::App* sc_search =
      app.add_subcommand("search", "list the valid primes up to a bound as p,f,x rows");
  sc_search->add_option("--max-p", max_p, "inclusive upper bound on p")->required();

  std::uint64_t gen_p = 0;
  std::uint64_t gen_alpha = 0;
  int gen_tuple = 0;
  std::string gen_b = "0000";
  CLI::App* sc_generate =
      app.add_subcommand("generate", "construct one sequence and print its record");
  sc_generate->add_option("--p", gen_p, "valid family prime")->required();
  CLI::Option* gen_alpha_opt = sc_generate->add_option(
      "--alpha", gen_alpha, "generator override (default: smallest primitive root)");
  sc_generate->add_option("--tuple", gen_tuple, "column tuple id")
      ->check(CLI::Range(0, 7))
      ->capture_default_str();
  sc_generate->add_option("--b", gen_b, "offset bits, b(0)=b(2) and b(1)=b(3)")
      ->capture_default_str();

  std::string profile_in;
  CLI::App* sc_profile = app.add_subcommand(
      "profile", "print the autocorrelation profile and classification of each input sequence");
  sc_profile->add_option("--in", profile_in, "input file: record or 0/1 lines")->required();

  std::string verify_in;
  CLI::App* sc_verify = app.add_subcommand(
      "verify", "classify each input sequence; exit 0 only if every one is optimal");
  sc_verify->add_option("--in", verify_in, "input file: record or 0/1 lines")->required();

  std::uint64_t table_p = 0;
  std::uint64_t table_alpha = 0;
  CLI::App* sc_table = app.add_subcommand(
      "table", "check the family's closed-form correlation constants by exhaustive sweep");
  sc_table->add_option("--p", table_p, "valid family prime")->required();
  CLI::Option* table_alpha_opt = sc_table->add_option(
      "--alpha", table_alpha, "generator override (default: smallest primitive root)");

  CLI::App* sc_example1 = app.add_subcommand(
      "example1", "rebuild the p = 29 reference construction and check it end to end");

  try {
    // CLI11's vector overload consumes the arguments back to front.
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    if (sc_search->parsed()) return cmd_search(max_p, out);
    if (sc_generate->parsed()) {
      std::optional<std::uint64_t> alpha;
      if (gen_alpha_opt->count() > 0) alpha = gen_alpha;
      return cmd_generate(gen_p, alpha, gen_tuple, gen_b, out);
    }
    if (sc_profile->parsed()) return cmd_profile(profile_in, out);
    if (sc_verify->parsed()) return cmd_verify(verify_in, out);
    if (sc_table->parsed()) {
      std::optional<std::uint64_t> alpha;
      if (table_alpha_opt->count() > 0) alpha = table_alpha;
      return cmd_table(table_p, alpha, out);
    }
    if (sc_example1->parsed()) return cmd_example1(out);
  } catch (const TextParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  err << "error: no subcommand\n";
  return kExitInvalidInput;
}

}  // namespace ilseq
