#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "separ/bench/bench.hpp"

using namespace separ;
using namespace separ::bench;
using namespace std::chrono;

TEST(Throughput, Arithmetic) {
  const double t = compute_throughput(16, duration<double, std::micro>(117.308));
  EXPECT_GE(t, 136.3);
  EXPECT_LE(t, 136.5);
  EXPECT_DOUBLE_EQ(compute_throughput(64, milliseconds(1)), 64.0);
  // Doubling both size and time leaves the rate unchanged.
  EXPECT_DOUBLE_EQ(compute_throughput(128, duration<double, std::micro>(7092.86 * 2)),
                   compute_throughput(64, duration<double, std::micro>(7092.86)));
}

TEST(Throughput, RejectsDegenerateInput) {
  EXPECT_THROW(compute_throughput(16, nanoseconds(0)), std::invalid_argument);
  EXPECT_THROW(compute_throughput(16, duration<double>(-1.0)), std::invalid_argument);
  EXPECT_THROW(compute_throughput(0, seconds(1)), std::invalid_argument);
}

TEST(RunBench, SingleRepetition) {
  BenchOptions o;
  o.repetitions = 1;
  o.warmup = std::chrono::nanoseconds(0);
  const auto r = run_bench(MasterKey{}, Nonce{}, 64, o);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].operation, "init");
  EXPECT_EQ(r[1].operation, "encrypt");
  EXPECT_EQ(r[2].operation, "decrypt");
  for (const auto &x : r) {
    EXPECT_GT(x.median_ns, 0.0);
    EXPECT_EQ(x.repetitions, 1u);
    EXPECT_NEAR(x.throughput_kbps, x.message_bits / (x.median_ns * 1e-6), 1e-9 * x.throughput_kbps);
  }
}

TEST(RunBench, RejectsBadSizes) {
  EXPECT_THROW(run_bench(MasterKey{}, Nonce{}, 0), std::invalid_argument);
  EXPECT_THROW(run_bench(MasterKey{}, Nonce{}, 24), std::invalid_argument);
  BenchOptions o;
  o.repetitions = 0;
  EXPECT_THROW(run_bench(MasterKey{}, Nonce{}, 64, o), std::invalid_argument);
}

TEST(RunBench, EncryptionScalesWithLength) {
  BenchOptions o;
  o.repetitions = 101;
  std::vector<double> ratios;
  for (int i = 0; i < 5; ++i) {
    const double t64 = run_bench(MasterKey{}, Nonce{}, 64, o)[1].median_ns;
    const double t192 = run_bench(MasterKey{}, Nonce{}, 192, o)[1].median_ns;
    ratios.push_back(t192 / t64);
  }
  std::nth_element(ratios.begin(), ratios.begin() + 2, ratios.end());
  EXPECT_GE(ratios[2], 2.2);
  EXPECT_LE(ratios[2], 3.8);
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream out;
  write_csv_header(out);
  write_csv(out, {{"encrypt", 64, 3, 1000.0, 64000.0}});
  EXPECT_EQ(out.str(), "operation,message_bits,repetitions,median_ns,throughput_kbps\nencrypt,64,3,1000,64000\n");
}
