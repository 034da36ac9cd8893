#include "separ/bench/bench.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#if defined(__linux__)
#include <sched.h>
#endif

#include "separ/cipher.hpp"

namespace separ::bench {

double compute_throughput(std::uint64_t bits, std::chrono::duration<double> time) {
  if (bits == 0) throw std::invalid_argument("throughput needs a positive bit count");
  if (!(time.count() > 0.0)) throw std::invalid_argument("throughput needs a positive duration");
  const double ms = time.count() * 1e3;
  return static_cast<double>(bits) / ms;
}

namespace {

using Clock = std::chrono::steady_clock;

// Keeps the optimizer from discarding benchmarked results.
volatile Word g_sink;

template <typename F>
double time_once(F &&f, std::chrono::nanoseconds min_sample) {
  std::size_t iters = 0;
  const auto start = Clock::now();
  auto now = start;
  do {
    f();
    ++iters;
    now = Clock::now();
  } while (now - start < min_sample);
  return std::chrono::duration<double, std::nano>(now - start).count() / static_cast<double>(iters);
}

template <typename F>
double median_ns(F &&f, const BenchOptions &o) {
  if (o.warmup.count() > 0) time_once(f, o.warmup);
  std::vector<double> samples(o.repetitions);
  for (auto &s : samples) s = time_once(f, o.min_sample);
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  if (samples.size() % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(samples.begin(), mid);
  return (lo + hi) / 2.0;
}

BenchResult result(const char *op, std::size_t bits, std::size_t reps, double ns) {
  return {op, bits, reps, ns, compute_throughput(bits, std::chrono::duration<double, std::nano>(ns))};
}

}  // namespace

std::vector<BenchResult> run_bench(const MasterKey &key, const Nonce &nonce, std::size_t message_bits,
                                   const BenchOptions &o, const LfsrSpec &lfsr) {
  if (message_bits == 0 || message_bits % 16 != 0) {
    throw std::invalid_argument("message_bits must be a positive multiple of 16");
  }
  if (o.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");

  const Separ cipher(key, lfsr);
  const CipherState ready = cipher.initialize(nonce);
  std::mt19937_64 rng(o.seed);
  std::vector<Word> message(message_bits / 16);
  for (auto &w : message) w = static_cast<Word>(rng());
  std::vector<Word> ciphertext = message;
  {
    CipherState st = ready;
    cipher.encrypt_words(st, ciphertext);
  }
  std::vector<Word> buf(message.size());

  const double init = median_ns([&] { g_sink = cipher.initialize(nonce).lfsr; }, o);
  const double enc = median_ns(
      [&] {
        CipherState st = ready;
        std::copy(message.begin(), message.end(), buf.begin());
        cipher.encrypt_words(st, buf);
        g_sink = buf.back();
      },
      o);
  const double dec = median_ns(
      [&] {
        CipherState st = ready;
        std::copy(ciphertext.begin(), ciphertext.end(), buf.begin());
        cipher.decrypt_words(st, buf);
        g_sink = buf.back();
      },
      o);

  // Initialization processes no message bits; its throughput is quoted
  // against the message it prepares for.
  return {result("init", message_bits, o.repetitions, init), result("encrypt", message_bits, o.repetitions, enc),
          result("decrypt", message_bits, o.repetitions, dec)};
}

void write_csv_header(std::ostream &out) {
  out << "operation,message_bits,repetitions,median_ns,throughput_kbps\n";
}

void write_csv(std::ostream &out, const std::vector<BenchResult> &results) {
  for (const auto &r : results) {
    out << r.operation << ',' << r.message_bits << ',' << r.repetitions << ',' << r.median_ns << ','
        << r.throughput_kbps << '\n';
  }
}

bool pin_to_one_cpu() {
#if defined(__linux__)
  cpu_set_t current;
  CPU_ZERO(&current);
  if (sched_getaffinity(0, sizeof current, &current) != 0) return false;
  for (int cpu = 0; cpu < CPU_SETSIZE; ++cpu) {
    if (!CPU_ISSET(cpu, &current)) continue;
    cpu_set_t one;
    CPU_ZERO(&one);
    CPU_SET(cpu, &one);
    return sched_setaffinity(0, sizeof one, &one) == 0;
  }
  return false;
#else
  return false;
#endif
}

}  // namespace separ::bench
