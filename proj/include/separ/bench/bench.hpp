#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "separ/lfsr.hpp"
#include "separ/types.hpp"

namespace separ::bench {

struct BenchResult {
  std::string operation;  // init, encrypt or decrypt
  std::size_t message_bits = 0;
  std::size_t repetitions = 0;
  double median_ns = 0.0;
  double throughput_kbps = 0.0;
};

// bits per millisecond, i.e. kilobits per second. Throws
// std::invalid_argument unless bits > 0 and the duration is positive.
double compute_throughput(std::uint64_t bits, std::chrono::duration<double> time);

struct BenchOptions {
  std::size_t repetitions = 101;
  // Untimed running before each measurement series.
  std::chrono::nanoseconds warmup{5000000};
  // Each repetition loops until at least this long has elapsed and reports
  // the per-iteration time.
  std::chrono::nanoseconds min_sample{20000};
  std::uint64_t seed = 1;
};

// Median timings of initialization and of steady-state encryption and
// decryption of one message_bits message. The message is derived from
// options.seed. Throws std::invalid_argument unless message_bits is a
// positive multiple of 16 and repetitions >= 1.
std::vector<BenchResult> run_bench(const MasterKey &key, const Nonce &nonce, std::size_t message_bits,
                                   const BenchOptions &options = {},
                                   const LfsrSpec &lfsr = LfsrSpec::standard());

void write_csv_header(std::ostream &out);
void write_csv(std::ostream &out, const std::vector<BenchResult> &results);

// Restricts the calling thread to one logical processor where supported.
bool pin_to_one_cpu();

}  // namespace separ::bench
