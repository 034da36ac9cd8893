#include "separ/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "separ/analysis/avalanche.hpp"
#include "separ/analysis/characteristic.hpp"
#include "separ/analysis/complexity.hpp"
#include "separ/analysis/differential.hpp"
#include "separ/analysis/nist.hpp"
#include "separ/analysis/sbox_analysis.hpp"
#include "separ/analysis/statistics.hpp"
#include "separ/bench/bench.hpp"
#include "separ/cipher.hpp"
#include "separ/errors.hpp"
#include "separ/hex.hpp"
#include "separ/vectors.hpp"

namespace separ::cli {

namespace {

using json = nlohmann::json;
using Bytes = std::vector<std::uint8_t>;

constexpr const char *kPublishedKey = "E8B9B733DA5D96D702DD3972E95307FD50C512DBF44A233E8D1E9DF5FC7D6371";
constexpr const char *kPublishedPt = "156F19E18FE6297519A352C45731536A";

struct Io {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

struct DataArgs {
  std::string in_path;
  std::string data_hex;
  std::string out_path;
  std::string format = "bin";
};

struct KeyArgs {
  std::string key_hex;
  std::string iv_hex;
};

MasterKey parse_key(const std::string &hex) { return MasterKey::from_hex(hex); }

Nonce parse_iv(const std::string &hex) { return hex.empty() ? Nonce{} : Nonce::from_hex(hex); }

Bytes read_all(std::istream &s) {
  return Bytes(std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>());
}

// Hex text may carry '#' comment lines (the --pad-zero header).
Bytes decode_hex_text(const Bytes &raw) {
  std::istringstream lines(std::string(raw.begin(), raw.end()));
  std::string line, digits;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    digits += line;
  }
  return from_hex(digits);
}

Bytes read_input(const DataArgs &a, Io &io) {
  if (!a.data_hex.empty()) return from_hex(a.data_hex);
  Bytes raw;
  if (a.in_path.empty() || a.in_path == "-") {
    raw = read_all(io.in);
  } else {
    std::ifstream f(a.in_path, std::ios::binary);
    if (!f) throw IoError("cannot open " + a.in_path);
    raw = read_all(f);
    if (f.bad()) throw IoError("cannot read " + a.in_path);
  }
  return a.format == "hex" ? decode_hex_text(raw) : raw;
}

void write_output(const std::string &path, const std::string &content, Io &io) {
  if (path.empty() || path == "-") {
    io.out << content;
    io.out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << content;
  f.close();
  if (!f) throw IoError("cannot write " + path);
}

std::string encode(const Bytes &b, const std::string &format, const std::string &header = {}) {
  if (format == "hex") return header + to_hex(b) + "\n";
  return std::string(b.begin(), b.end());
}

void add_key_options(CLI::App *c, KeyArgs &k, bool required = true) {
  auto *key = c->add_option("--key", k.key_hex, "master key, 64 hex digits");
  if (required) key->required();
  c->add_option("--iv", k.iv_hex, "nonce, 32 hex digits (default all zero)");
}

void add_data_options(CLI::App *c, DataArgs &d) {
  c->add_option("--in", d.in_path, "input file (default stdin)");
  c->add_option("--data", d.data_hex, "input given inline as hex");
  c->add_option("--out", d.out_path, "output file (default stdout)");
  c->add_option("--format", d.format, "bulk data encoding")->check(CLI::IsMember({"hex", "bin"}));
}

std::string json_line(const json &j) { return j.dump() + "\n"; }

json report_json(const analysis::StatReport &r) {
  return {{"test", r.test}, {"statistic", r.statistic}, {"p_value", r.p_value},
          {"pass", r.passed}, {"sample_bits", r.sample_bits}};
}

Word parse_word(const std::string &s) {
  const Bytes b = from_hex(s);
  if (b.size() != 2) throw LengthError("a difference is 4 hex digits");
  return static_cast<Word>((b[0] << 8) | b[1]);
}

// --- analyze stats -------------------------------------------------------

struct StatsArgs {
  KeyArgs keys;
  std::string in_path;
  std::size_t bits = 8000000;
  std::size_t samples = 1;
  std::size_t max_lag = 1024;
  std::uint64_t seed = 1;
  std::string out_path;
};

std::string stats_sample(const Bytes &data, std::size_t max_lag, json meta, std::map<std::string, int> &passes) {
  std::string text;
  json s = std::move(meta);
  s["octets"] = data.size();
  s["entropy"] = analysis::entropy(data);
  const auto h = analysis::histogram(data);
  const auto [lo, hi] = std::minmax_element(h.begin(), h.end());
  s["histogram_min"] = *lo;
  s["histogram_max"] = *hi;
  const auto corr = analysis::autocorrelation_parallel(data, std::min(max_lag, data.size() - 1));
  double worst = 0.0;
  std::size_t worst_lag = 0;
  bool undefined = false;
  for (std::size_t k = 1; k < corr.size(); ++k) {
    if (!corr[k]) {
      undefined = true;
      continue;
    }
    if (std::abs(*corr[k]) > worst) {
      worst = std::abs(*corr[k]);
      worst_lag = k;
    }
  }
  s["max_abs_autocorrelation"] = worst;
  s["max_autocorrelation_lag"] = worst_lag;
  s["autocorrelation_undefined"] = undefined;
  const auto per = analysis::periodicity(data);
  s["period"] = per.period ? json(*per.period) : json(nullptr);
  s["longest_repeat"] = per.longest_repeat;
  s["longest_run"] = per.longest_run;
  text += json_line(s);

  const auto bits = analysis::bits_from_octets(data);
  if (bits.size() >= analysis::kSuiteMinBits) {
    for (const auto &r : analysis::nist_subset(bits)) {
      json j = report_json(r);
      if (s.contains("sample")) j["sample"] = s["sample"];
      text += json_line(j);
      passes[r.test] += r.passed ? 1 : 0;
    }
  }
  return text;
}

std::string run_stats(const StatsArgs &a, Io &io) {
  std::map<std::string, int> passes;
  std::string text;
  std::size_t samples = 0;
  if (!a.in_path.empty()) {
    DataArgs d;
    d.in_path = a.in_path;
    text += stats_sample(read_input(d, io), a.max_lag, json{{"source", a.in_path}}, passes);
    samples = 1;
  } else {
    if (a.bits == 0 || a.bits % 16 != 0) throw LengthError("--bits must be a positive multiple of 16");
    const Separ cipher(a.keys.key_hex.empty() ? MasterKey{} : parse_key(a.keys.key_hex),
                       LfsrSpec::from_environment());
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.samples; ++i) {
      Nonce iv;
      if (!a.keys.iv_hex.empty() && i == 0) {
        iv = parse_iv(a.keys.iv_hex);
      } else {
        for (auto &w : iv.words) w = static_cast<Word>(rng());
      }
      const Bytes ks = keystream(cipher, iv, a.bits / 16);
      text += stats_sample(ks, a.max_lag, json{{"sample", i}, {"iv", iv.to_hex()}}, passes);
    }
    samples = a.samples;
  }
  json summary{{"summary", "nist_subset"}, {"samples", samples}};
  for (const auto &[t, n] : passes) summary["passed"][t] = n;
  return text + json_line(summary);
}

// --- dispatch --------------------------------------------------------------

int classify(const std::exception &e) {
  if (dynamic_cast<const HexError *>(&e)) return kBadHex;
  if (dynamic_cast<const LengthError *>(&e)) return kBadLength;
  if (dynamic_cast<const PaddingError *>(&e)) return kPadding;
  if (dynamic_cast<const IoError *>(&e)) return kIo;
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  Io io{in, out, err};
  CLI::App app{"SEPAR cipher and analysis workbench", "separ"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "threads for parallel analysis kernels")->check(CLI::PositiveNumber);

  int status = kOk;
  std::function<void()> action;

  // encrypt / decrypt
  KeyArgs ck;
  DataArgs cd;
  bool pad_zero = false;
  for (const char *name : {"encrypt", "decrypt"}) {
    auto *c = app.add_subcommand(name, std::string(name) + " a message");
    add_key_options(c, ck);
    add_data_options(c, cd);
    if (std::string(name) == "encrypt") {
      c->add_flag("--pad-zero", pad_zero, "append a zero octet to odd-length input");
    }
    const bool enc = std::string(name) == "encrypt";
    c->callback([&, enc] {
      action = [&, enc] {
        const MasterKey key = parse_key(ck.key_hex);
        const Nonce iv = parse_iv(ck.iv_hex);
        Bytes data = read_input(cd, io);
        std::string header;
        if (enc && pad_zero && data.size() % 2 == 1) {
          data.push_back(0);
          header = "# padded: 1 zero octet appended\n";
        }
        const Separ cipher(key, LfsrSpec::from_environment());
        const Bytes result = enc ? cipher.encrypt_message(iv, data) : cipher.decrypt_message(iv, data);
        write_output(cd.out_path, encode(result, cd.format, header), io);
      };
    });
  }

  // keystream
  KeyArgs kk;
  DataArgs kd;
  std::size_t words = 0;
  {
    auto *c = app.add_subcommand("keystream", "ciphertext of an all-zero plaintext");
    add_key_options(c, kk);
    c->add_option("--words", words, "number of 16-bit words")->required();
    c->add_option("--out", kd.out_path, "output file (default stdout)");
    c->add_option("--format", kd.format, "output encoding")->check(CLI::IsMember({"hex", "bin"}));
    c->callback([&] {
      action = [&] {
        const Separ cipher(parse_key(kk.key_hex), LfsrSpec::from_environment());
        write_output(kd.out_path, encode(keystream(cipher, parse_iv(kk.iv_hex), words), kd.format), io);
      };
    });
  }

  // analyze
  auto *analyze = app.add_subcommand("analyze", "cryptanalysis and statistics");
  analyze->require_subcommand(1);

  int sbox_id = 1;
  std::string table = "ddt";
  std::string sbox_out;
  {
    auto *c = analyze->add_subcommand("sbox", "S-box tables and criteria");
    c->add_option("--id", sbox_id, "S-box 1..4")->check(CLI::Range(1, 4));
    c->add_option("--table", table, "ddt, lat, anf or golden")->check(CLI::IsMember({"ddt", "lat", "anf", "golden"}));
    c->add_option("--out", sbox_out, "output file (default stdout)");
    c->callback([&] {
      action = [&] {
        const NibbleTable &s = kSboxTables[static_cast<std::size_t>(sbox_id - 1)];
        std::ostringstream o;
        if (table == "ddt") {
          analysis::write_csv(o, analysis::compute_ddt(s).counts);
        } else if (table == "lat") {
          analysis::write_csv(o, analysis::compute_lat(s).biases);
        } else if (table == "anf") {
          const auto anf = analysis::algebraic_degree(s);
          for (unsigned i = 0; i < 4; ++i) {
            o << json_line({{"component", i}, {"degree", anf.component_degree[i]}, {"monomials", anf.monomials[i]}});
          }
        } else {
          const auto g = analysis::golden_check(s);
          o << json_line({{"sbox", sbox_id},
                          {"bijective", g.bijective},
                          {"max_diff_prob", g.max_diff_prob.to_string()},
                          {"max_linear_prob", g.max_linear_prob.to_string()},
                          {"degree", g.degree},
                          {"golden", g.golden}});
        }
        write_output(sbox_out, o.str(), io);
      };
    });
  }

  KeyArgs ak;
  DataArgs ad;
  std::size_t trials = 1000;
  std::uint64_t aval_seed = 1;
  std::string target = "pt";
  std::optional<std::size_t> bit;
  std::size_t window = 0;
  {
    auto *c = analyze->add_subcommand("avalanche", "ciphertext change under single-bit flips");
    add_key_options(c, ak, false);
    c->add_option("--data", ad.data_hex, "plaintext hex (default: the published base vector)");
    c->add_option("--in", ad.in_path, "plaintext file");
    c->add_option("--out", ad.out_path, "output file (default stdout)");
    c->add_option("--trials", trials, "number of random flips");
    c->add_option("--seed", aval_seed, "generator seed");
    c->add_option("--target", target, "pt, key or iv")->check(CLI::IsMember({"pt", "key", "iv"}));
    c->add_option("--bit", bit, "flip one bit (from the most significant) and report both ciphertexts");
    c->add_option("--window", window, "draw flips from the first N bits only");
    c->callback([&] {
      action = [&] {
        const MasterKey key = parse_key(ak.key_hex.empty() ? kPublishedKey : ak.key_hex);
        const Nonce iv = parse_iv(ak.iv_hex);
        Bytes pt;
        if (ad.data_hex.empty() && ad.in_path.empty()) {
          pt = from_hex(kPublishedPt);
        } else {
          ad.format = "bin";
          pt = read_input(ad, io);
        }
        const auto t = target == "pt"    ? analysis::FlipTarget::Plaintext
                       : target == "key" ? analysis::FlipTarget::Key
                                         : analysis::FlipTarget::Iv;
        const LfsrSpec lfsr = LfsrSpec::from_environment();
        json j;
        if (bit) {
          const auto r = analysis::avalanche(key, iv, pt, {t, *bit}, lfsr);
          j = {{"target", target}, {"bit", *bit}, {"distance", r.distance}, {"bits", r.bits},
               {"base_ct", r.base_ct}, {"flipped_ct", r.flipped_ct}};
        } else {
          const auto s = analysis::avalanche_trials(key, iv, pt, t, trials, aval_seed, window, lfsr);
          j = {{"target", target}, {"trials", s.trials}, {"bits", s.bits}, {"mean", s.mean},
               {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}, {"seed", aval_seed}, {"window", window}};
        }
        write_output(ad.out_path, json_line(j), io);
      };
    });
  }

  StatsArgs sa;
  {
    auto *c = analyze->add_subcommand("stats", "entropy, correlation, periodicity and the NIST subset");
    add_key_options(c, sa.keys, false);
    c->add_option("--in", sa.in_path, "analyze this file instead of generated keystream");
    c->add_option("--bits", sa.bits, "keystream bits per sample");
    c->add_option("--samples", sa.samples, "number of samples, each under its own random IV");
    c->add_option("--max-lag", sa.max_lag, "largest autocorrelation lag");
    c->add_option("--seed", sa.seed, "seed for the sample IVs");
    c->add_option("--out", sa.out_path, "output file (default stdout)");
    c->callback([&] { action = [&] { write_output(sa.out_path, run_stats(sa, io), io); }; });
  }

  int rounds = 1;
  std::string pmin = "1/4";
  std::string diff_in, diff_out, diff_file;
  bool with_path = false, count_max = false;
  std::size_t max_results = std::size_t{1} << 22;
  {
    auto *c = analyze->add_subcommand("diff", "differential characteristics of chained round bodies");
    c->add_option("--rounds", rounds, "number of round bodies 1..5")->check(CLI::Range(1, analysis::kMaxIterations));
    c->add_option("--pmin", pmin, "probability threshold: a/b, 2^-k or decimal");
    c->add_option("--input", diff_in, "fix the input difference (hex)");
    c->add_option("--output", diff_out, "fix the output difference (hex)");
    c->add_option("--max-results", max_results, "abort beyond this many characteristics");
    c->add_flag("--path", with_path, "print intermediate differences");
    c->add_flag("--count-max", count_max, "exhaustive maximum differential count under all-zero subkeys");
    c->add_option("--out", diff_file, "output file (default stdout)");
    c->callback([&] {
      action = [&] {
        std::ostringstream o;
        if (count_max) {
          const auto table = analysis::b16_chain_table(SubkeySet{1, {}}, rounds);
          const auto m = analysis::diff_max_parallel(table);
          char buf[64];
          std::snprintf(buf, sizeof buf, "0x%04X -> 0x%04X count=%u\n", m.a, m.b, m.count);
          o << buf;
        } else {
          analysis::CharacteristicQuery q;
          q.iterations = rounds;
          q.p_min = analysis::Rational::parse(pmin);
          if (!diff_in.empty()) q.input = parse_word(diff_in);
          if (!diff_out.empty()) q.output = parse_word(diff_out);
          q.max_results = max_results;
          const auto found = analysis::characteristic_search(q);
          for (const auto &ch : found) o << analysis::format_characteristic(ch, with_path) << '\n';
          io.err << "# " << found.size() << " characteristics\n";
        }
        write_output(diff_file, o.str(), io);
      };
    });
  }

  std::uint64_t per_block = 18, blocks = 16, ks_boxes = 32;
  {
    auto *c = analyze->add_subcommand("complexity", "equation and variable counts");
    c->add_option("--per-block", per_block, "S-boxes per Enc_block");
    c->add_option("--blocks", blocks, "Enc_block evaluations");
    c->add_option("--key-schedule", ks_boxes, "S-boxes in the key schedule");
    c->callback([&] {
      action = [&] {
        const auto r = analysis::algebraic_complexity(per_block, blocks, ks_boxes);
        io.out << json_line({{"sboxes", r.sboxes}, {"equations", r.equations}, {"variables", r.variables}});
      };
    });
  }

  // bench
  KeyArgs bk;
  std::vector<std::size_t> sizes = {64, 128, 192};
  bench::BenchOptions bo;
  std::string bench_out;
  {
    auto *c = app.add_subcommand("bench", "timing and throughput");
    add_key_options(c, bk, false);
    c->add_option("--bits", sizes, "message sizes in bits")->delimiter(',');
    c->add_option("--reps", bo.repetitions, "repetitions per measurement")->check(CLI::PositiveNumber);
    c->add_option("--seed", bo.seed, "seed for the message content");
    c->add_option("--out", bench_out, "CSV file (default stdout)");
    c->callback([&] {
      action = [&] {
        bench::pin_to_one_cpu();
        const MasterKey key = bk.key_hex.empty() ? MasterKey{} : parse_key(bk.key_hex);
        const Nonce iv = parse_iv(bk.iv_hex);
        std::ostringstream o;
        bench::write_csv_header(o);
        for (std::size_t bits : sizes) {
          bench::write_csv(o, bench::run_bench(key, iv, bits, bo, LfsrSpec::from_environment()));
        }
        write_output(bench_out, o.str(), io);
      };
    });
  }

  // vectors
  auto *vectors = app.add_subcommand("vectors", "known-answer vectors");
  vectors->require_subcommand(1);
  std::string vec_file;
  {
    auto *c = vectors->add_subcommand("check", "verify every record of a vector file");
    c->add_option("file", vec_file, "vector file")->required();
    c->callback([&] {
      action = [&] {
        const auto vs = load_vectors(vec_file);
        const LfsrSpec lfsr = LfsrSpec::from_environment();
        std::size_t bad = 0;
        for (const auto &v : vs) {
          const auto r = check_vector(v, lfsr);
          io.out << (r.ok ? "ok       " : "MISMATCH ") << (v.name.empty() ? "(unnamed)" : v.name) << '\n';
          if (!r.ok) {
            io.out << "  got ct=" << to_hex(r.actual) << '\n';
            ++bad;
          }
        }
        io.out << vs.size() - bad << '/' << vs.size() << " vectors ok\n";
        if (bad > 0) status = kVectorMismatch;
      };
    });
  }
  KeyArgs mk;
  std::string vec_name, vec_pt;
  {
    auto *c = vectors->add_subcommand("make", "print a record for the given inputs");
    add_key_options(c, mk);
    c->add_option("--data", vec_pt, "plaintext hex")->required();
    c->add_option("--name", vec_name, "record name");
    c->callback([&] {
      action = [&] {
        TestVector v{vec_name, parse_key(mk.key_hex), parse_iv(mk.iv_hex), from_hex(vec_pt), {}};
        v.ct = Separ(v.key, LfsrSpec::from_environment()).encrypt_message(v.iv, v.pt);
        write_vector(io.out, v);
      };
    });
  }

  std::vector<const char *> argv = {"separ"};
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif
  try {
    if (action) action();
  } catch (const std::exception &e) {
    err << "separ: " << e.what() << '\n';
    return classify(e);
  }
  return status;
}

}  // namespace separ::cli
