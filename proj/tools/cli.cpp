#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "parryac/complexity.hpp"
#include "parryac/errors.hpp"
#include "parryac/extremal.hpp"
#include "parryac/numeration.hpp"
#include "parryac/oracle.hpp"
#include "parryac/stream.hpp"

namespace parryac::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Plain, Csv, Json };

struct Config {
  std::string family;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::string format = "plain";
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Plain;
}

json envelope(const Morphism& m) {
  return {{"p", m.p()}, {"q", m.q()}, {"family", std::string(to_string(m.family()))}};
}

class UsageError : public Error {
 public:
  using Error::Error;
};

// ---- ac ----

int cmd_ac(const Morphism& m, Format fmt, const std::string& n_start_text,
           const std::optional<std::string>& n_end_text, std::ostream& out) {
  const BigInt start = parse_decimal(n_start_text);
  const BigInt end = n_end_text ? parse_decimal(*n_end_text) : start;
  if (start < 1) throw UsageError("--n must be >= 1");
  if (end < start) throw UsageError("--n-end must be >= --n");

  json results = json::array();
  if (fmt == Format::Csv) out << "n,ac,method\n";
  for (BigInt n = start; n <= end; ++n) {
    const ACResult r = ac(m, n);
    if (fmt == Format::Json) {
      results.push_back({{"n", r.n.str()}, {"ac", r.value}, {"method", to_string(r.method)}});
    } else {
      out << r.n << ',' << r.value << ',' << to_string(r.method) << '\n';
    }
  }
  if (fmt == Format::Json) {
    json doc = envelope(m);
    doc["results"] = std::move(results);
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

// ---- oracle ----

void print_interval(const ParikhInterval& r, Format fmt, const Morphism& m, std::ostream& out) {
  switch (fmt) {
    case Format::Json: {
      json doc = envelope(m);
      doc["result"] = {{"n", r.n},
                       {"min_b", r.min_b},
                       {"max_b", r.max_b},
                       {"ac", r.ac()},
                       {"prefix_len", r.prefix_len_used},
                       {"stabilized", r.stabilized}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,min_b,max_b,ac,prefix_len,stabilized\n";
      [[fallthrough]];
    case Format::Plain:
      out << r.n << ',' << r.min_b << ',' << r.max_b << ',' << r.ac() << ',' << r.prefix_len_used
          << ',' << (r.stabilized ? "true" : "false") << '\n';
      break;
  }
}

int cmd_oracle(const Morphism& m, Format fmt, std::size_t n, std::optional<std::size_t> prefix_len,
               std::ostream& out, std::ostream& err) {
  if (n == 0) throw UsageError("--n must be >= 1");
  if (prefix_len) {
    print_interval(parikh_extrema(m, n, *prefix_len), fmt, m, out);
    return kExitOk;
  }
  try {
    print_interval(oracle_ac(m, n), fmt, m, out);
  } catch (const InstabilityError& e) {
    err << "unstable: " << e.what() << '\n';
    print_interval(e.last_interval(), fmt, m, out);
    return kExitUnstable;
  }
  return kExitOk;
}

// ---- verify ----

struct Check {
  unsigned closed = 0;
  std::optional<unsigned> prefix;  // absent for the simple q = 1 shortcut
  std::optional<std::size_t> oracle;
};

int cmd_verify(const Morphism& m, std::size_t n_max, std::ostream& out) {
  const OracleLimits limits;
  if (n_max == 0) throw UsageError("--n-max must be >= 1");
  if (n_max > limits.max_n) {
    throw UsageError("--n-max exceeds oracle cap " + std::to_string(limits.max_n));
  }

  std::vector<Check> checks(n_max + 1);
  std::atomic<std::size_t> next{1};
  auto worker = [&] {
    Oracle oracle(m, limits);
    for (std::size_t n = next++; n <= n_max; n = next++) {
      Check& c = checks[n];
      c.closed = ac(m, n).value;
      if (!(m.is_simple() && m.q() == 1)) c.prefix = ac_via_prefix_counts(m, n);
      try {
        c.oracle = oracle.stabilized(n).ac();
      } catch (const InstabilityError&) {
        c.oracle.reset();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(8, n_max));
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  std::size_t mismatches = 0;
  std::size_t unstable = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Check& c = checks[n];
    if (!c.oracle) {
      ++unstable;
      out << "UNSTABLE n=" << n << '\n';
      continue;
    }
    const bool agree = *c.oracle == c.closed && (!c.prefix || *c.prefix == c.closed);
    if (!agree) {
      ++mismatches;
      out << "MISMATCH n=" << n << " closed_form=" << c.closed
          << " prefix_difference=" << (c.prefix ? std::to_string(*c.prefix) : "n/a")
          << " oracle=" << *c.oracle << '\n';
    }
  }
  if (unstable > 0) return kExitUnstable;
  if (mismatches > 0) return kExitMismatch;
  out << "OK " << n_max << " checked\n";
  return kExitOk;
}

// ---- urep ----

int cmd_urep(const Morphism& m, Format fmt, const std::string& n_text,
             std::optional<std::size_t> places, std::ostream& out) {
  const BigInt n = parse_decimal(n_text);
  const UDigits d = normal_u_rep(m, n, places);
  if (fmt == Format::Json) {
    json doc = envelope(m);
    doc["n"] = n.str();
    doc["digits"] = d.digits;
    out << doc.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < d.digits.size(); ++i) out << (i ? "," : "") << d.digits[i];
  out << '\n';
  return kExitOk;
}

// ---- word ----

int cmd_word(const Morphism& m, const std::string& which, std::size_t len, std::ostream& out) {
  if (len > kDefaultPrefixCap) {
    throw ResourceError("--len exceeds cap " + std::to_string(kDefaultPrefixCap));
  }
  StreamTarget target = StreamTarget::UBeta;
  if (which == "v") target = StreamTarget::V;
  if (which == "w") target = StreamTarget::W;
  WordStream stream(m, target);
  constexpr std::size_t kChunk = std::size_t{1} << 20;
  FiniteWord chunk;
  for (std::size_t done = 0; done < len;) {
    const std::size_t step = std::min(kChunk, len - done);
    chunk.truncate(0);
    stream.emit(step, chunk);
    out << chunk.to_string();
    done += step;
  }
  out << '\n';
  return kExitOk;
}

// ---- maxac ----

int cmd_maxac(const Morphism& m, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    json doc = envelope(m);
    doc["max_ac"] = max_ac(m);
    doc["balance_bound"] = balance_bound(m);
    out << doc.dump() << '\n';
  } else {
    out << max_ac(m) << ' ' << balance_bound(m) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian complexity of the fixed points of quadratic Parry morphisms", "parryac"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--family", cfg.family, "simple: A->A^pB, B->A^q; nonsimple: A->A^pB, B->A^qB")
      ->required()
      ->check(CLI::IsMember({"simple", "nonsimple"}));
  app.add_option("--p", cfg.p, "p >= 1")->required();
  app.add_option("--q", cfg.q, "q >= 1")->required();
  app.add_option("--format", cfg.format, "plain|csv|json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  std::string n_text;
  std::optional<std::string> n_end_text;
  std::size_t n_window = 0;
  std::optional<std::size_t> prefix_len;
  std::size_t n_max = 0;
  std::optional<std::size_t> places;
  std::string which = "ubeta";
  std::size_t len = 0;

  auto* ac_cmd = app.add_subcommand("ac", "AC(n) by closed form for n or a range");
  ac_cmd->add_option("--n", n_text, "first n (decimal, any length)")->required();
  ac_cmd->add_option("--n-end", n_end_text, "last n, inclusive");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force B-count range over windows");
  oracle_cmd->add_option("--n", n_window, "window length")->required();
  oracle_cmd->add_option("--prefix-len", prefix_len, "scan exactly this prefix, no stabilization");

  auto* verify_cmd = app.add_subcommand("verify", "closed form vs prefix counts vs oracle, 1..n-max");
  verify_cmd->add_option("--n-max", n_max, "largest n checked")->required();

  auto* urep_cmd = app.add_subcommand("urep", "normal U-representation, most significant first");
  urep_cmd->add_option("--n", n_text, "nonnegative decimal")->required();
  urep_cmd->add_option("--places", places, "left-pad with zeros to this many digits");

  auto* word_cmd = app.add_subcommand("word", "prefix of u (ubeta), v or w");
  word_cmd->add_option("--which", which, "ubeta|v|w")->check(CLI::IsMember({"ubeta", "v", "w"}));
  word_cmd->add_option("--len", len, "number of letters")->required();

  auto* maxac_cmd = app.add_subcommand("maxac", "maximum AC and optimal balance bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Morphism m = make_morphism(cfg.p, cfg.q, parse_family(cfg.family));
    const Format fmt = parse_format(cfg.format);
    if (ac_cmd->parsed()) return cmd_ac(m, fmt, n_text, n_end_text, out);
    if (oracle_cmd->parsed()) return cmd_oracle(m, fmt, n_window, prefix_len, out, err);
    if (verify_cmd->parsed()) return cmd_verify(m, n_max, out);
    if (urep_cmd->parsed()) return cmd_urep(m, fmt, n_text, places, out);
    if (word_cmd->parsed()) return cmd_word(m, which, len, out);
    if (maxac_cmd->parsed()) return cmd_maxac(m, fmt, out);
  } catch (const UnsupportedConstruction& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parryac::cli
