// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "separ/analysis/avalanche.hpp"
#include "separ/analysis/characteristic.hpp"
#include "separ/analysis/complexity.hpp"
#include "separ/analysis/nist.hpp"
#include "separ/analysis/sbox_analysis.hpp"
#include "separ/analysis/statistics.hpp"
#include "separ/bench/bench.hpp"
#include "separ/block.hpp"
#include "separ/cipher.hpp"
#include "separ/hex.hpp"
#include "separ/vectors.hpp"

using namespace separ;
using namespace separ::analysis;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_s;  // 0 = no time bound
  std::function<Outcome()> run;
};

std::mt19937_64 &rng() {
  static std::mt19937_64 r(20240601);
  return r;
}

MasterKey random_key() {
  std::array<std::uint8_t, kKeyBytes> b{};
  for (auto &x : b) x = static_cast<std::uint8_t>(rng()());
  return MasterKey(b);
}

Nonce random_nonce() {
  Nonce n;
  for (auto &w : n.words) w = static_cast<Word>(rng()());
  return n;
}

std::string fmt(const char *f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome sbox_criteria() {
  std::string d;
  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto g = golden_check(kSboxTables[i]);
    ok = ok && g.bijective && g.max_diff_prob == Rational(1, 4) && g.max_linear_prob == Rational(1, 4) &&
         g.degree == 3;
    d += fmt("S%zu dp=%s lp=%s deg=%d%s", i + 1, g.max_diff_prob.to_string().c_str(),
             g.max_linear_prob.to_string().c_str(), g.degree, i < 3 ? "; " : "");
  }
  return {ok, d};
}

Outcome table_anchors() {
  const Ddt ddt = compute_ddt(kSboxTables[0]);
  const Lat lat = compute_lat(kSboxTables[0]);
  bool rows = true;
  for (const auto &s : kSboxTables) {
    for (const auto &row : compute_ddt(s).counts) {
      int sum = 0;
      for (int c : row) sum += c;
      rows = rows && sum == 16;
    }
  }
  return {ddt.counts[0][0] == 16 && lat.biases[0][0] == 8 && rows,
          fmt("DDT[0][0]=%d LAT[0][0]=%d all DDT rows sum to 16: %s", ddt.counts[0][0], lat.biases[0][0],
              rows ? "yes" : "no")};
}

Outcome round_trips() {
  std::size_t block_bad = 0;
  for (int s = 0; s < 8; ++s) {
    SubkeySet sk{1, {}};
    for (auto &k : sk.k) k = static_cast<Word>(rng()());
    for (std::uint32_t x = 0; x < 65536; ++x) {
      block_bad += dec_block(enc_block(static_cast<Word>(x), sk), sk) != x;
    }
  }
  std::size_t stream_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Separ c(random_key());
    const Nonce n = random_nonce();
    std::vector<std::uint8_t> msg(2 * (rng()() % 13));
    for (auto &b : msg) b = static_cast<std::uint8_t>(rng()());
    stream_bad += c.decrypt_message(n, c.encrypt_message(n, msg)) != msg;
  }
  const Separ c(random_key());
  const CipherState init = c.initialize(random_nonce());
  std::size_t step_bad = 0;
  for (std::uint32_t p = 0; p < 65536; ++p) {
    CipherState e = init, d = init;
    const Word ct = c.encrypt_word(e, static_cast<Word>(p));
    step_bad += c.decrypt_word(d, ct) != p || !(e == d);
  }
  return {block_bad + stream_bad + step_bad == 0,
          fmt("block failures %zu/524288, stream failures %zu/1000, single-step failures %zu/65536", block_bad,
              stream_bad, step_bad)};
}

Outcome synchronization() {
  const Separ c(random_key());
  const Nonce n = random_nonce();
  CipherState e = c.initialize(n), d = c.initialize(n);
  std::size_t bad = 0;
  for (int i = 0; i < 64; ++i) {
    StepTrace te, td;
    const Word ct = c.encrypt_word(e, static_cast<Word>(rng()()), te);
    c.decrypt_word(d, ct, td);
    const Word v23 = te.v[1], v45 = te.v[3];
    bad += !(e == d);
    bad += e.state[7] != v45;
    bad += e.state[4] != static_cast<Word>(v23 + te.lfsr_next);
  }
  return {bad == 0, fmt("64 matched steps, %zu mismatches", bad)};
}

Outcome lfsr_checks() {
  const LfsrSpec spec = LfsrSpec::standard();
  bool periods = true;
  std::string list;
  for (int i = 0; i < 8; ++i) {
    Word seed = 0;
    while (seed == 0) seed = static_cast<Word>(rng()());
    const auto p = lfsr_period(seed, spec);
    periods = periods && p && *p == 65535;
    list += fmt("%s%u", i ? "," : "", p ? *p : 0u);
  }
  std::size_t unset = 0;
  for (int i = 0; i < 1000; ++i) unset += (Separ(random_key()).initialize(random_nonce()).lfsr & 0x0100) == 0;
  return {periods && unset == 0, fmt("periods %s; bit 0x0100 unset after init in %zu/1000", list.c_str(), unset)};
}

Outcome complexity() {
  const auto a = algebraic_complexity(18, 16, 32);
  const auto b = algebraic_complexity_of(527);
  return {a.equations == 6720 && a.variables == 2560 && b.equations == 11067 && b.variables == 4216,
          fmt("(18,16,32) -> (%llu, %llu); 527 S-boxes -> (%llu, %llu)", (unsigned long long)a.equations,
              (unsigned long long)a.variables, (unsigned long long)b.equations, (unsigned long long)b.variables)};
}

Outcome one_round_count() {
  const auto found = characteristic_search(1, Rational(1, 4));
  return {found.size() == 28, fmt("expected 28, found %zu (every S-box DDT holds 18 entries of 4)", found.size())};
}

Outcome five_round_paths() {
  bool ok = true;
  std::string d;
  for (auto [in, out] : {std::pair<Word, Word>{0x0300, 0x0500}, {0x0700, 0x0D00}}) {
    CharacteristicQuery q;
    q.iterations = 5;
    q.p_min = Rational(1, std::uint64_t{1} << 30);
    q.input = in;
    q.output = out;
    const auto found = characteristic_search(q);
    bool exact = !found.empty();
    for (const auto &c : found) exact = exact && trail_probability(c.differences) == c.probability;
    ok = ok && exact;
    d += fmt("0x%04X->0x%04X: %zu trails, best p=%s; ", in, out, found.size(),
             found.empty() ? "-" : found.front().probability.to_string().c_str());
  }
  d.resize(d.size() - 2);
  return {ok, d};
}

Outcome statistics() {
  const Separ c(random_key());
  constexpr std::size_t kWords = 500000;  // 10^6 octets
  const auto first = keystream(c, random_nonce(), kWords);
  const double h = entropy(first);
  const auto corr = autocorrelation_parallel(first, 1024);
  double worst = 0.0;
  bool defined = true;
  for (std::size_t k = 1; k < corr.size(); ++k) {
    defined = defined && corr[k].has_value();
    if (corr[k]) worst = std::max(worst, std::abs(*corr[k]));
  }
  const auto per = periodicity(first);

  std::map<std::string, int> passes;
  std::vector<std::string> order;
  for (int s = 0; s < 10; ++s) {
    const auto sample = s == 0 ? first : keystream(c, random_nonce(), kWords);
    for (const auto &r : nist_subset(bits_from_octets(sample))) {
      if (!passes.count(r.test)) order.push_back(r.test);
      passes[r.test] += r.passed;
    }
  }
  bool nist = true;
  std::string tally;
  for (const auto &t : order) {
    nist = nist && passes[t] >= 9;
    tally += fmt("%s %d/10, ", t.c_str(), passes[t]);
  }
  tally.resize(tally.size() - 2);
  const bool ok = h >= 7.99 && nist && defined && worst < 0.01 && !per.period;
  return {ok, fmt("entropy %.6f, max |autocorrelation| %.5f, period %s, longest repeat %zu; %s", h, worst,
                  per.period ? std::to_string(*per.period).c_str() : "none", per.longest_repeat, tally.c_str())};
}

const MasterKey kBaseKey = MasterKey::from_hex("E8B9B733DA5D96D702DD3972E95307FD50C512DBF44A233E8D1E9DF5FC7D6371");
const std::vector<std::uint8_t> kBasePt = from_hex("156F19E18FE6297519A352C45731536A");

Outcome avalanche_mean() {
  const auto s = avalanche_trials(kBaseKey, Nonce{}, kBasePt, FlipTarget::Plaintext, 1000, 9);
  const auto w = avalanche_trials(kBaseKey, Nonce{}, kBasePt, FlipTarget::Plaintext, 1000, 9, 16);
  return {s.mean >= 54.0 && s.mean <= 74.0,
          fmt("mean %.2f of 128 over 1000 uniform flips (min %zu, max %zu); flips within the first word only: "
              "mean %.2f",
              s.mean, s.min, s.max, w.mean)};
}

Outcome avalanche_vectors() {
  const std::string published = "41E15D769296494746F638CE27FB07E9";
  const auto ct = to_hex(Separ(kBaseKey).encrypt_message(Nonce{}, kBasePt));
  const auto vs = load_vectors(std::string(SEPAR_SOURCE_DIR) + "/vectors/separ_kat.txt");
  std::size_t ok = 0;
  for (const auto &v : vs) ok += check_vector(v).ok;
  const bool reproduced = ct == published;
  const bool frozen = ok == vs.size() && !vs.empty() && vs.front().ct == from_hex(ct);
  return {reproduced || frozen,
          fmt("base ciphertext %s (%s published value); frozen vectors %zu/%zu", ct.c_str(),
              reproduced ? "matches" : "differs from", ok, vs.size())};
}

Outcome throughput() {
  using namespace std::chrono;
  const double t = bench::compute_throughput(16, duration<double, std::micro>(117.308));
  bench::BenchOptions o;
  o.repetitions = 201;
  // Median of five ratios, each from its own pair of measurement series.
  std::vector<double> ratios;
  for (int i = 0; i < 5; ++i) {
    const double t64 = bench::run_bench(kBaseKey, Nonce{}, 64, o)[1].median_ns;
    const double t192 = bench::run_bench(kBaseKey, Nonce{}, 192, o)[1].median_ns;
    ratios.push_back(t192 / t64);
  }
  std::nth_element(ratios.begin(), ratios.begin() + 2, ratios.end());
  const double ratio = ratios[2];
  return {t >= 136.3 && t <= 136.5 && ratio >= 2.2 && ratio <= 3.8,
          fmt("16 bits in 117.308 us -> %.3f kb/s; encrypt t(192)/t(64) = %.2f", t, ratio)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "S-box criteria", 1, sbox_criteria},
      {"2", "DDT/LAT anchors", 0, table_anchors},
      {"3", "round-trip oracle", 60, round_trips},
      {"4", "state synchronization", 0, synchronization},
      {"5", "LFSR period and init bit", 1, lfsr_checks},
      {"6", "algebraic complexity", 0, complexity},
      {"7a", "one-round characteristics at p>=1/4", 300, one_round_count},
      {"7b", "five-round paths 0x0300->0x0500, 0x0700->0x0D00", 300, five_round_paths},
      {"8", "statistical battery", 300, statistics},
      {"9a", "avalanche mean in [54, 74]", 60, avalanche_mean},
      {"9b", "avalanche base vector reproduced or frozen", 60, avalanche_vectors},
      {"10", "throughput formula and linear scaling", 0, throughput},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s [%s] %s (%.2fs%s): %s\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), secs,
                in_time ? "" : ", over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
